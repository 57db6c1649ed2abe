#include "dimeq/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace dimeq {

std::vector<OrbitLabel> admissible_orbits(const CoefficientConfig& config, int c) {
  if (c < 1) throw std::invalid_argument("contribution must be >= 1");
  std::vector<OrbitLabel> out;
  if (config.base_orbit.is_classical()) {
    const auto& base = config.base_orbit.partition();
    const auto& family = config.base_orbit.family();
    for (const Partition& p : partitions_dominating(base, family)) {
      OrbitLabel orbit = OrbitLabel::classical(family, p);
      if (contribution(config.base_orbit, orbit) == c) out.push_back(std::move(orbit));
    }
  } else {
    const auto& table = ExceptionalTable::instance();
    for (const ExceptionalOrbit* o : table.above(config.base_orbit.group(),
                                                 config.base_orbit.label())) {
      if ((o->dim - orbit_dim(config.base_orbit)) / 2 == c)
        out.push_back(OrbitLabel::exceptional(o->group, o->label));
    }
  }
  return out;
}

std::vector<std::pair<OrbitLabel, int>> slot_orbits(const CoefficientConfig& config, Role role,
                                                    const SolveOptions& opts) {
  std::vector<std::pair<OrbitLabel, int>> out;
  auto consider = [&](OrbitLabel orbit) {
    if (role == Role::Cuspidal) {
      if (config.family == GroupFamily::GL) {
        // cuspidal representations of GL are generic: regular orbit only
        if (orbit.partition().length() != 1) return;
      } else if (config.family == GroupFamily::GE6 && opts.ge6_cuspidal_restriction) {
        if (orbit.label() == "D5" || orbit.label() == "D5(a1)") return;
      }
    }
    const int c = contribution(config.base_orbit, orbit);
    if (c >= 1) out.emplace_back(std::move(orbit), c);
  };
  if (config.base_orbit.is_classical()) {
    const auto& family = config.base_orbit.family();
    for (const Partition& p : partitions_dominating(config.base_orbit.partition(), family))
      consider(OrbitLabel::classical(family, p));
  } else {
    const auto& table = ExceptionalTable::instance();
    for (const ExceptionalOrbit* o :
         table.above(config.base_orbit.group(), config.base_orbit.label()))
      consider(OrbitLabel::exceptional(o->group, o->label));
  }
  return out;
}

namespace {

bool is_open_regime(int m, const SlotSpec& cuspidal) {
  return m >= 4 && cuspidal.family == GroupFamily::GL && cuspidal.param == 1;
}

struct SlotCandidates {
  SlotSpec spec;
  CoefficientConfig config;
  std::vector<std::pair<OrbitLabel, int>> orbits;
};

}  // namespace

std::vector<SolutionRow> solve(int m, std::span<const SlotSpec> specs,
                               const SolveOptions& opts) {
  if (specs.size() < 2) throw std::invalid_argument("a row needs at least two slots");
  if (specs.front().role != Role::Cuspidal)
    throw std::invalid_argument("the first slot must be cuspidal");
  if (specs.back().role != Role::Eisenstein)
    throw std::invalid_argument("the last slot must be the Eisenstein series");
  for (size_t i = 1; i + 1 < specs.size(); ++i)
    if (specs[i].role != Role::Automorphic)
      throw std::invalid_argument("middle slots must be automorphic");

  std::vector<SlotCandidates> slots;
  slots.reserve(specs.size());
  for (const SlotSpec& spec : specs) {
    CoefficientConfig config = instantiate(spec.family, spec.param, m);
    auto orbits = slot_orbits(config, spec.role, opts);
    slots.push_back({spec, std::move(config), std::move(orbits)});
  }

  const int budget = m * m - 1;
  const bool open = is_open_regime(m, specs.front());
  std::vector<SolutionRow> rows;
  std::vector<Slot> current;
  current.reserve(specs.size());

  auto dfs = [&](auto&& self, size_t idx, int used) -> void {
    if (idx == slots.size()) {
      if (used != budget) return;
      SolutionRow row;
      row.m = m;
      row.slots = current;
      row.total = used;
      row.open_regime = open;
      rows.push_back(std::move(row));
      return;
    }
    const int slots_left = static_cast<int>(slots.size() - idx);
    for (const auto& [orbit, c] : slots[idx].orbits) {
      if (used + c + (slots_left - 1) > budget) continue;
      current.push_back({slots[idx].spec.role, slots[idx].config, orbit, c});
      self(self, idx + 1, used + c);
      current.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return rows;
}

std::string TableGroupKey::to_string() const {
  std::string s = "l=" + std::to_string(l) + " pattern(";
  for (size_t i = 0; i < pattern.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(pattern[i]);
  }
  s += ')';
  return s;
}

int TableSet::row_count() const {
  int n = 0;
  for (const auto& [key, rows] : groups) n += static_cast<int>(rows.size());
  return n;
}

int TableSet::max_length() const {
  int best = 0;
  for (const auto& [key, rows] : groups)
    if (!rows.empty()) best = std::max(best, key.l);
  return best;
}

namespace {

// Deterministic slot ordering used to canonicalize middle slots and sort rows.
std::tuple<int, int, std::string> slot_key(const Slot& s) {
  return {static_cast<int>(s.config.family), s.config.param, s.orbit.to_string()};
}

bool row_less(const SolutionRow& a, const SolutionRow& b) {
  if (a.slots.size() != b.slots.size()) return a.slots.size() < b.slots.size();
  for (size_t i = 0; i < a.slots.size(); ++i) {
    const auto ka = slot_key(a.slots[i]), kb = slot_key(b.slots[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

bool row_equal(const SolutionRow& a, const SolutionRow& b) {
  return !row_less(a, b) && !row_less(b, a);
}

void canonicalize(SolutionRow& row) {
  if (row.slots.size() > 3) {
    std::sort(row.slots.begin() + 1, row.slots.end() - 1,
              [](const Slot& a, const Slot& b) { return slot_key(a) < slot_key(b); });
  }
}

// All (family, param) choices for one slot of the enumeration.
std::vector<SlotSpec> spec_options(int m, Role role, ParamRange params) {
  std::vector<SlotSpec> out;
  for (GroupFamily f : catalog_families(m)) {
    if (family_has_param(f)) {
      for (int q = params.lo; q <= params.hi; ++q) out.push_back({role, f, q});
    } else {
      out.push_back({role, f, 0});
    }
  }
  return out;
}

int min_contribution(const std::vector<SlotSpec>& options, int m, Role role,
                     const SolveOptions& opts) {
  int best = -1;
  for (const SlotSpec& spec : options) {
    for (const auto& [orbit, c] :
         slot_orbits(instantiate(spec.family, spec.param, m), role, opts))
      if (best < 0 || c < best) best = c;
  }
  return best;
}

std::vector<SolutionRow> collect_rows(int m, ParamRange params, const SolveOptions& opts,
                                      const std::vector<SlotSpec>& cuspidal_options) {
  const int budget = m * m - 1;
  std::vector<SlotSpec> middle_options = spec_options(m, Role::Automorphic, params);
  std::vector<SlotSpec> eis_options = spec_options(m, Role::Eisenstein, params);

  int min_cusp = -1;
  for (const SlotSpec& spec : cuspidal_options) {
    for (const auto& [orbit, c] :
         slot_orbits(instantiate(spec.family, spec.param, m), Role::Cuspidal, opts))
      if (min_cusp < 0 || c < min_cusp) min_cusp = c;
  }
  if (min_cusp < 0) return {};
  const int min_noncusp = min_contribution(eis_options, m, Role::Eisenstein, opts);
  int l_bound = min_noncusp >= 1 ? 1 + (budget - min_cusp) / min_noncusp : 1;
  l_bound = std::min(l_bound, budget);
  if (opts.l_max > 0) l_bound = std::min(l_bound, opts.l_max);

  std::vector<SolutionRow> all;
  for (int l = 2; l <= l_bound; ++l) {
    // middle slots are interchangeable after canonicalization: enumerate
    // nondecreasing option-index sequences
    std::vector<size_t> mid(static_cast<size_t>(l - 2), 0);
    auto run_combo = [&](const SlotSpec& cusp, const SlotSpec& eis) {
      std::vector<SlotSpec> specs;
      specs.push_back(cusp);
      for (size_t idx : mid) specs.push_back(middle_options[idx]);
      specs.push_back(eis);
      for (SolutionRow& row : solve(m, specs, opts)) {
        canonicalize(row);
        all.push_back(std::move(row));
      }
    };
    auto for_all_mid = [&](auto&& self, size_t pos, const SlotSpec& cusp) -> void {
      if (pos == mid.size()) {
        for (const SlotSpec& eis : eis_options) run_combo(cusp, eis);
        return;
      }
      const size_t start = pos == 0 ? 0 : mid[pos - 1];
      for (size_t idx = start; idx < middle_options.size(); ++idx) {
        mid[pos] = idx;
        self(self, pos + 1, cusp);
      }
    };
    for (const SlotSpec& cusp : cuspidal_options) for_all_mid(for_all_mid, 0, cusp);
  }
  std::sort(all.begin(), all.end(), row_less);
  all.erase(std::unique(all.begin(), all.end(), row_equal), all.end());
  return all;
}

}  // namespace

TableSet enumerate_tables(int m, ParamRange params, const SolveOptions& opts) {
  if (params.lo < 1 || params.hi < params.lo)
    throw std::invalid_argument("parameter range must be finite and positive");
  std::vector<SlotSpec> cusp_options;
  for (SlotSpec spec : spec_options(m, Role::Cuspidal, params)) {
    if (is_open_regime(m, spec) && !opts.allow_open_regime) continue;
    cusp_options.push_back(spec);
  }
  TableSet tables;
  tables.m = m;
  tables.params = params;
  for (SolutionRow& row : collect_rows(m, params, opts, cusp_options)) {
    TableGroupKey key{row.length(), row.pattern()};
    tables.groups[key].push_back(std::move(row));
  }
  return tables;
}

CuspidalBoundReport verify_cuspidal_bound(std::span<const int> ms, std::span<const int> ks,
                                          int l_max, ParamRange params) {
  CuspidalBoundReport report;
  for (int m : ms) {
    for (int k : ks) {
      const CoefficientConfig config = instantiate(GroupFamily::GL, k, m);
      // generic cuspidal contribution: half the regular orbit minus dim U
      const OrbitLabel regular =
          OrbitLabel::classical(gl(k * m), Partition{k * m});
      const int c = contribution(config.base_orbit, regular);
      if (2 * c != k * m * (m - 1)) {
        report.contribution_identity = false;
        report.counterexamples.push_back("contribution identity fails at m=" +
                                         std::to_string(m) + " k=" + std::to_string(k));
      }
      if (k < 3) continue;
      SolveOptions opts;
      opts.l_max = l_max;
      std::vector<SlotSpec> cusp{{Role::Cuspidal, GroupFamily::GL, k}};
      for (const SolutionRow& row : collect_rows(m, params, opts, cusp)) {
        report.no_solutions_for_deep_k = false;
        report.counterexamples.push_back("unexpected solution: " + row.to_string());
      }
    }
  }
  return report;
}

int max_length(int m, ParamRange params, const SolveOptions& opts) {
  return enumerate_tables(m, params, opts).max_length();
}

nlohmann::json to_json(const Slot& slot) {
  nlohmann::json j{{"role", role_name(slot.role)},
                   {"family", family_name(slot.config.family)},
                   {"orbit", to_json(slot.orbit)},
                   {"contribution", slot.contribution}};
  if (family_has_param(slot.config.family)) j["param"] = slot.config.param;
  return j;
}

nlohmann::json to_json(const SolutionRow& row) {
  nlohmann::json slots = nlohmann::json::array();
  for (const Slot& s : row.slots) slots.push_back(to_json(s));
  return {{"m", row.m},           {"l", row.length()},
          {"pattern", row.pattern()}, {"slots", std::move(slots)},
          {"total", row.total},   {"status", vanishing_name(row.status)},
          {"open_regime", row.open_regime}};
}

nlohmann::json to_json(const TableSet& tables) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& [key, rows] : tables.groups) {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const SolutionRow& row : rows) rows_json.push_back(to_json(row));
    groups.push_back({{"l", key.l}, {"pattern", key.pattern}, {"rows", std::move(rows_json)}});
  }
  return {{"m", tables.m},
          {"params", {{"lo", tables.params.lo}, {"hi", tables.params.hi}}},
          {"groups", std::move(groups)}};
}

nlohmann::json to_json(const MatchReport& report) {
  return {{"ok", report.ok},
          {"missing", report.missing},
          {"unexpected", report.unexpected},
          {"notes", report.notes}};
}

}  // namespace dimeq
