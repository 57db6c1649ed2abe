#include "dimeq/catalog.hpp"

#include <stdexcept>

namespace dimeq {

std::string_view family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::GL: return "GL";
    case GroupFamily::GSp: return "GSp";
    case GroupFamily::GSO: return "GSO";
    case GroupFamily::GE6: return "GE6";
    case GroupFamily::GE7: return "GE7";
  }
  throw std::logic_error("bad family");
}

GroupFamily parse_family(std::string_view name) {
  if (name == "GL" || name == "gl") return GroupFamily::GL;
  if (name == "GSp" || name == "gsp") return GroupFamily::GSp;
  if (name == "GSO" || name == "gso") return GroupFamily::GSO;
  if (name == "GE6" || name == "ge6") return GroupFamily::GE6;
  if (name == "GE7" || name == "ge7") return GroupFamily::GE7;
  throw std::invalid_argument("unknown group family: " + std::string(name));
}

bool family_has_param(GroupFamily f) {
  return f == GroupFamily::GL || f == GroupFamily::GSp || f == GroupFamily::GSO;
}

int CoefficientConfig::ambient_size() const {
  switch (family) {
    case GroupFamily::GL: return param * m;
    case GroupFamily::GSp: return 2 * (2 * param + 1);
    case GroupFamily::GSO: return 4 * param;
    default: return 0;
  }
}

std::string CoefficientConfig::to_string() const {
  std::string s(family_name(family));
  if (family_has_param(family)) s += "[" + std::to_string(param) + "]";
  return s + " base " + base_orbit.to_string();
}

std::vector<GroupFamily> catalog_families(int m) {
  if (m < 2) throw std::invalid_argument("catalog_families requires m >= 2");
  std::vector<GroupFamily> fams{GroupFamily::GL};
  if (m == 3) fams.push_back(GroupFamily::GE6);
  if (m == 2) {
    fams.push_back(GroupFamily::GSp);
    fams.push_back(GroupFamily::GSO);
    fams.push_back(GroupFamily::GE7);
  }
  auto extra = extra_families(m);
  fams.insert(fams.end(), extra.begin(), extra.end());
  return fams;
}

std::span<const GroupFamily> extra_families(int) { return {}; }

CoefficientConfig instantiate(GroupFamily family, int param, int m) {
  if (m < 2) throw std::invalid_argument("instantiate requires m >= 2");
  if (family_has_param(family) && param < 1)
    throw std::invalid_argument("family parameter must be >= 1");
  switch (family) {
    case GroupFamily::GL: {
      std::vector<int> base(static_cast<size_t>(m), param);
      OrbitLabel orbit = OrbitLabel::classical(gl(param * m), Partition(std::move(base)));
      return {family, param, m, orbit, half_dim(orbit)};
    }
    case GroupFamily::GSp: {
      if (m != 2) throw std::invalid_argument("GSp configurations exist only for m = 2");
      OrbitLabel orbit = OrbitLabel::classical(gsp(2 * (2 * param + 1)),
                                               Partition{2 * param + 1, 2 * param + 1});
      return {family, param, m, orbit, half_dim(orbit)};
    }
    case GroupFamily::GSO: {
      if (m != 2) throw std::invalid_argument("GSO configurations exist only for m = 2");
      OrbitLabel orbit =
          OrbitLabel::classical(gso(4 * param), Partition{2 * param, 2 * param});
      return {family, param, m, orbit, half_dim(orbit)};
    }
    case GroupFamily::GE7: {
      if (m != 2) throw std::invalid_argument("GE7 configurations exist only for m = 2");
      OrbitLabel orbit = OrbitLabel::exceptional(ExcGroup::E7, "E6");
      return {family, 0, m, orbit, half_dim(orbit)};
    }
    case GroupFamily::GE6: {
      if (m != 3) throw std::invalid_argument("GE6 configurations exist only for m = 3");
      OrbitLabel orbit = OrbitLabel::exceptional(ExcGroup::E6, "D4");
      return {family, 0, m, orbit, half_dim(orbit)};
    }
  }
  throw std::logic_error("bad family");
}

nlohmann::json to_json(const Partition& p) { return nlohmann::json(p.parts()); }

nlohmann::json to_json(const OrbitLabel& orbit) {
  if (orbit.is_classical()) {
    static constexpr std::string_view names[] = {"GL", "GSp", "GSO"};
    return {{"family", names[static_cast<int>(orbit.family().tag)]},
            {"ambient", orbit.family().ambient},
            {"parts", orbit.partition().parts()}};
  }
  return {{"group", exc_group_name(orbit.group())}, {"label", orbit.label()}};
}

nlohmann::json to_json(const CoefficientConfig& config) {
  nlohmann::json j{{"family", family_name(config.family)},
                   {"m", config.m},
                   {"base_orbit", to_json(config.base_orbit)},
                   {"dim_U", config.dim_u}};
  if (family_has_param(config.family)) j["param"] = config.param;
  return j;
}

}  // namespace dimeq
