#include "dimeq/inducing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dimeq/root_system.hpp"

namespace dimeq {

namespace {

ClassicalFamily ambient_family(GroupFamily group, int size) {
  switch (group) {
    case GroupFamily::GL: return gl(size);
    case GroupFamily::GSp: return gsp(size);
    case GroupFamily::GSO: return gso(size);
    default: throw std::invalid_argument("inducing data exist for the classical families only");
  }
}

// Target ((p+c)(p-c))-style parameters: returns {p, c}. Throws when the target
// is not one of the classified two-row shapes.
std::pair<int, int> target_params(GroupFamily group, const Partition& target) {
  const int size = target.size();
  int p = 0, c = 0;
  switch (group) {
    case GroupFamily::GL:
      if (size % 2 != 0) throw std::invalid_argument("GL target must have even size");
      p = size / 2;
      c = target.part(0) - p;
      break;
    case GroupFamily::GSp:
      if ((size - 2) % 4 != 0) throw std::invalid_argument("GSp target size must be 4p+2");
      p = (size - 2) / 4;
      c = (target.part(0) - 2 * p) / 2;
      break;
    case GroupFamily::GSO:
      if (size % 4 != 0) throw std::invalid_argument("GSO target size must be 4p");
      p = size / 4;
      c = (target.part(0) - 2 * p + 1) / 2;
      break;
    default:
      throw std::invalid_argument("inducing data exist for the classical families only");
  }
  return {p, c};
}

bool is_classified_target(GroupFamily group, const Partition& target) {
  if (target.empty() || target.length() > 2) return false;
  const int size = target.size();
  switch (group) {
    case GroupFamily::GL:
      if (size % 2 != 0) return false;
      break;
    case GroupFamily::GSp:
      if (size % 4 != 2) return false;
      break;
    case GroupFamily::GSO:
      if (size % 4 != 0) return false;
      break;
    default:
      return false;
  }
  if (!is_valid(target, ambient_family(group, size))) return false;
  // the target must sit strictly above the rectangular base orbit
  return target_params(group, target).second >= 1;
}

void check_target(GroupFamily group, const Partition& target) {
  if (!is_classified_target(group, target))
    throw std::invalid_argument("not a classified target for " +
                                std::string(family_name(group)) + ": " + target.to_string());
}

std::vector<Partition> two_row_partitions(int n) {
  if (n == 0) return {Partition{}};
  return partitions_of(n, 2);
}

}  // namespace

InduceResult induce(GroupFamily family, const Partition& tau1, const Partition& tau2) {
  Partition sum = family == GroupFamily::GL ? add(tau1, tau2) : add(doubled(tau1), tau2);
  const bool valid = is_valid(sum, ambient_family(family, sum.size()));
  return {std::move(sum), valid};
}

int InducingDatum::ambient_size() const { return target.size(); }

int InducingDatum::other_block() const {
  return group == GroupFamily::GL ? ambient_size() - gl_block
                                  : ambient_size() - 2 * gl_block;
}

int InducingDatum::i() const {
  auto [p, c] = target_params(group, target);
  (void)p;
  return group == GroupFamily::GL ? gl_block - 2 * (a() - c) : 2 * a() - gl_block;
}

bool operator<(const InducingDatum& x, const InducingDatum& y) {
  if (x.gl_block != y.gl_block) return x.gl_block < y.gl_block;
  if (x.tau1 != y.tau1) return x.tau1 < y.tau1;
  return x.tau2 < y.tau2;
}

std::string InducingDatum::to_string() const {
  std::string m_str;
  if (group == GroupFamily::GL) {
    m_str = "GL_" + std::to_string(gl_block) + " x GL_" + std::to_string(other_block());
  } else {
    m_str = "GL_" + std::to_string(gl_block) + " x " +
            std::string(family_name(group)) + "_" + std::to_string(other_block());
  }
  return m_str + ": " + tau1.to_string() + ", " + tau2.to_string();
}

std::vector<InducingDatum> classify_inducing_data(GroupFamily group, const Partition& target) {
  check_target(group, target);
  const int size = target.size();
  std::set<InducingDatum> found;
  if (group == GroupFamily::GL) {
    for (int b1 = 1; b1 < size; ++b1) {
      for (const Partition& t1 : two_row_partitions(b1)) {
        for (const Partition& t2 : two_row_partitions(size - b1)) {
          if (add(t1, t2) == target) found.insert({group, target, b1, t1, t2});
        }
      }
    }
  } else {
    const int n_cap = size / 2;
    const FamilyTag rest_tag = group == GroupFamily::GSp ? FamilyTag::GSp : FamilyTag::GSO;
    for (int b = 1; b <= n_cap; ++b) {
      const int rest = size - 2 * b;
      for (const Partition& t1 : two_row_partitions(b)) {
        for (const Partition& t2 : two_row_partitions(rest)) {
          if (!is_valid(t2, {rest_tag, rest})) continue;
          if (add(doubled(t1), t2) == target) found.insert({group, target, b, t1, t2});
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<InducingDatum> closed_form_inducing_data(GroupFamily group, const Partition& target) {
  check_target(group, target);
  auto [p, c] = target_params(group, target);
  std::set<InducingDatum> out;
  auto push = [&](int b1, std::vector<int> t1, std::vector<int> t2) {
    if (b1 < 1) return;
    if (std::min(t1[0], t1[1]) < 0 || std::min(t2[0], t2[1]) < 0) return;
    if (t1[1] > t1[0] || t2[1] > t2[0]) return;
    Partition tau1(std::move(t1)), tau2(std::move(t2));
    if (tau1.size() != b1) return;
    out.insert({group, target, b1, std::move(tau1), std::move(tau2)});
  };
  switch (group) {
    case GroupFamily::GL: {
      if (c != 1 && c != 2)
        throw std::invalid_argument("no closed form for GL target " + target.to_string());
      for (int i = 0; i <= 2 * c; ++i)
        for (int a = 0; a <= p + c; ++a) {
          const int b1 = 2 * (a - c) + i;
          if (b1 >= target.size()) continue;
          push(b1, {a, a - 2 * c + i}, {p - a + c, p - a + c - i});
        }
      break;
    }
    case GroupFamily::GSp: {
      if (c != 1 && c != 2)
        throw std::invalid_argument("no closed form for GSp target " + target.to_string());
      for (int i = 0; i <= 2 * c - 1; ++i)
        for (int a = 0; a <= p + c; ++a) {
          const int lead = c == 1 ? 2 * p - 2 * a + 2 : 2 * p - 2 * a + 4;
          const int tail = c == 1 ? 2 * p - 2 * a + 2 * i : 2 * p - 2 * a + 2 * i - 2;
          push(2 * a - i, {a, a - i}, {lead, tail});
        }
      break;
    }
    case GroupFamily::GSO: {
      if (c != 1 && c != 2)
        throw std::invalid_argument("no closed form for GSO target " + target.to_string());
      for (int i = 0; i <= 2 * c - 1; ++i)
        for (int a = 0; a <= p + c; ++a) {
          const int lead = c == 1 ? 2 * p - 2 * a + 1 : 2 * p - 2 * a + 3;
          const int tail = c == 1 ? 2 * p - 2 * a + 2 * i - 1 : 2 * p - 2 * a + 2 * i - 3;
          push(2 * a - i, {a, a - i}, {lead, tail});
        }
      break;
    }
    default:
      throw std::invalid_argument("inducing data exist for the classical families only");
  }
  return {out.begin(), out.end()};
}

int classical_parabolic_radical_dim(GroupFamily group, int ambient, int gl_block) {
  const int b = gl_block;
  switch (group) {
    case GroupFamily::GL:
      return b * (ambient - b);
    case GroupFamily::GSp: {
      const int n_cap = ambient / 2;
      return n_cap * n_cap - b * (b - 1) / 2 - (n_cap - b) * (n_cap - b);
    }
    case GroupFamily::GSO: {
      const int n_cap = ambient / 2;
      return n_cap * (n_cap - 1) - b * (b - 1) / 2 - (n_cap - b) * (n_cap - b - 1);
    }
    default:
      throw std::invalid_argument("classical families only");
  }
}

bool induced_dim_identity(const InducingDatum& d) {
  const int lhs = classical_orbit_dim(d.target, ambient_family(d.group, d.ambient_size())) / 2;
  const int tau1_half = classical_orbit_dim(d.tau1, gl(d.gl_block)) / 2;
  int tau2_half = 0;
  if (d.group == GroupFamily::GL) {
    tau2_half = classical_orbit_dim(d.tau2, gl(d.other_block())) / 2;
  } else {
    const FamilyTag tag = d.group == GroupFamily::GSp ? FamilyTag::GSp : FamilyTag::GSO;
    tau2_half = classical_orbit_dim(d.tau2, {tag, d.other_block()}) / 2;
  }
  const int radical = classical_parabolic_radical_dim(d.group, d.ambient_size(), d.gl_block);
  return lhs == tau1_half + tau2_half + radical;
}

std::string EisensteinDescriptor::to_string() const {
  std::string s(family_name(family));
  if (family == GroupFamily::GE7) {
    s += " levi {";
    for (size_t i = 0; i < ge7_levi.size(); ++i) {
      if (i) s += ',';
      s += "a" + std::to_string(ge7_levi[i]);
    }
    s += '}';
  } else {
    s += " blocks (";
    for (size_t i = 0; i < gl_blocks.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(gl_blocks[i]);
    }
    s += ')';
  }
  return s;
}

bool is_odd(const EisensteinDescriptor& e) {
  if (e.family == GroupFamily::GE7) {
    for (int needed : {2, 5, 7}) {
      if (std::find(e.ge7_levi.begin(), e.ge7_levi.end(), needed) == e.ge7_levi.end())
        return true;
    }
    return false;
  }
  return std::any_of(e.gl_blocks.begin(), e.gl_blocks.end(),
                     [](int b) { return b % 2 != 0; });
}

std::vector<EisensteinDescriptor> descriptor_options(const Slot& slot) {
  if (slot.role == Role::Cuspidal) return {};
  const GroupFamily fam = slot.config.family;
  std::vector<EisensteinDescriptor> out;
  if (fam == GroupFamily::GE7) {
    const auto& rs = RootSystem::get(RootSystemType::E7);
    for (int dropped = 1; dropped <= 7; ++dropped) {
      std::vector<int> levi;
      for (int i = 1; i <= 7; ++i)
        if (i != dropped) levi.push_back(i);
      // realizable when the Levi factor can carry the remaining dimension
      const int radical = unipotent_radical_dim(rs, std::span<const int>(levi));
      if (half_dim(slot.orbit) - radical >= 0)
        out.push_back({fam, {}, std::move(levi)});
    }
    return out;
  }
  if (fam == GroupFamily::GE6) return {};  // no two-block classification is kept for GE6
  if (!is_classified_target(fam, slot.orbit.partition())) return {};
  for (const InducingDatum& d : classify_inducing_data(fam, slot.orbit.partition())) {
    EisensteinDescriptor e{fam, {}, {}};
    e.gl_blocks.push_back(d.gl_block);
    if (fam == GroupFamily::GL) e.gl_blocks.push_back(d.other_block());
    if (std::find_if(out.begin(), out.end(), [&](const EisensteinDescriptor& x) {
          return x.gl_blocks == e.gl_blocks;
        }) == out.end())
      out.push_back(std::move(e));
  }
  return out;
}

namespace {

void check_descriptor(const Slot& slot, const EisensteinDescriptor& e) {
  if (e.family != slot.config.family)
    throw std::invalid_argument("descriptor family does not match the slot");
  if (slot.role == Role::Cuspidal)
    throw std::invalid_argument("cuspidal slots take no Eisenstein descriptor");
  if (e.family == GroupFamily::GE7) {
    if (e.ge7_levi.size() != 6)
      throw std::invalid_argument("GE7 descriptor must keep six simple roots");
    for (int i : e.ge7_levi)
      if (i < 1 || i > 7) throw std::invalid_argument("GE7 descriptor root index out of range");
    return;
  }
  if (e.family == GroupFamily::GE6)
    throw std::invalid_argument("no descriptors are defined for GE6 slots");
  int total = 0;
  for (int b : e.gl_blocks) {
    if (b < 1) throw std::invalid_argument("descriptor block sizes must be positive");
    total += b;
  }
  const int ambient = slot.config.ambient_size();
  const int gl_total = e.family == GroupFamily::GL ? ambient : 0;
  if (e.family == GroupFamily::GL) {
    if (total != gl_total)
      throw std::invalid_argument("descriptor blocks must fill the ambient group");
  } else if (2 * total > ambient) {
    throw std::invalid_argument("descriptor blocks exceed the ambient group");
  }
  // A two-stage descriptor must match one of the classified inducing data.
  const bool two_stage = (e.family == GroupFamily::GL && e.gl_blocks.size() == 2) ||
                         (e.family != GroupFamily::GL && e.gl_blocks.size() == 1);
  if (two_stage) {
    for (const InducingDatum& d : classify_inducing_data(e.family, slot.orbit.partition())) {
      if (d.gl_block == e.gl_blocks[0] ||
          (e.family == GroupFamily::GL && d.gl_block == e.gl_blocks[1]))
        return;
    }
    throw std::invalid_argument("descriptor " + e.to_string() +
                                " is inconsistent with orbit " + slot.orbit.to_string());
  }
}

}  // namespace

SolutionRow label_row(SolutionRow row,
                      std::span<const std::vector<EisensteinDescriptor>> options_per_slot) {
  if (options_per_slot.size() != row.slots.size())
    throw std::invalid_argument("one descriptor option list per slot is required");
  for (size_t i = 0; i < row.slots.size(); ++i)
    for (const EisensteinDescriptor& e : options_per_slot[i]) check_descriptor(row.slots[i], e);
  if (row.m != 2) {
    row.status = Vanishing::Unknown;
    return row;
  }
  bool any_odd = false;
  for (const auto& options : options_per_slot)
    for (const EisensteinDescriptor& e : options)
      if (is_odd(e)) any_odd = true;
  row.status = any_odd ? Vanishing::NonzeroUnipotent : Vanishing::NotUnipotent;
  return row;
}

}  // namespace dimeq
