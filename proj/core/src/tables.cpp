#include <algorithm>
#include <set>
#include <stdexcept>

#include "dimeq/embedded_fixtures.hpp"
#include "dimeq/solver.hpp"

namespace dimeq {

namespace {

struct FixtureData {
  int version = 0;
  std::vector<TableFixtureGroup> groups;
};

FixtureData parse_fixture(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("table fixture: ") + e.what());
  }
  FixtureData data;
  data.version = doc.at("version").get<int>();
  for (const auto& g : doc.at("tables")) {
    TableFixtureGroup group;
    group.m = g.at("m").get<int>();
    group.key.l = g.at("l").get<int>();
    group.key.pattern = g.at("pattern").get<std::vector<int>>();
    if (static_cast<int>(group.key.pattern.size()) != group.key.l)
      throw std::invalid_argument("table fixture: pattern length != l");
    for (const auto& slot : g.at("slots")) {
      std::vector<TableFixtureEntry> entries;
      for (const auto& e : slot) {
        TableFixtureEntry entry;
        entry.family = parse_family(e.at("family").get<std::string>());
        if (e.contains("parts")) {
          for (const auto& pair : e.at("parts"))
            entry.parts.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        } else {
          entry.label = e.at("label").get<std::string>();
        }
        entries.push_back(std::move(entry));
      }
      group.slots.push_back(std::move(entries));
    }
    if (group.slots.size() != static_cast<size_t>(group.key.l))
      throw std::invalid_argument("table fixture: slot count != l");
    data.groups.push_back(std::move(group));
  }
  return data;
}

// The closed-regime family is uniform in m: cuspidal depth 2 with the regular
// orbit against the unique minimal Eisenstein orbit. The file lists the
// desk-checked range; larger m reuse the same affine forms.
TableFixtureGroup closed_regime_group(int m) {
  TableFixtureGroup group;
  group.m = m;
  group.key.l = 2;
  group.key.pattern = {m * (m - 1), m - 1};
  TableFixtureEntry cusp{GroupFamily::GL, {{m, 0}}, ""};
  TableFixtureEntry eis{GroupFamily::GL, {}, ""};
  eis.parts.emplace_back(1, 1);
  for (int t = 0; t < m - 2; ++t) eis.parts.emplace_back(1, 0);
  eis.parts.emplace_back(1, -1);
  group.slots = {{cusp}, {eis}};
  return group;
}

const FixtureData& fixture() {
  static const FixtureData data = [] {
    FixtureData parsed = parse_fixture(detail::kTablesExpectedJson);
    int max_m = 0;
    for (const TableFixtureGroup& g : parsed.groups) max_m = std::max(max_m, g.m);
    for (int m = max_m + 1; m <= 12; ++m) parsed.groups.push_back(closed_regime_group(m));
    return parsed;
  }();
  return data;
}

std::string entry_name(const TableFixtureEntry& entry) {
  if (entry.parts.empty()) return std::string(family_name(entry.family)) + " " + entry.label;
  std::string s(family_name(entry.family));
  s += " (";
  for (size_t i = 0; i < entry.parts.size(); ++i) {
    if (i) s += ')', s += '(';
    const auto [c, d] = entry.parts[i];
    if (c != 0) {
      if (c != 1) s += std::to_string(c);
      s += 'q';
      if (d > 0) s += "+" + std::to_string(d);
      if (d < 0) s += std::to_string(d);
    } else {
      s += std::to_string(d);
    }
  }
  s += ')';
  return s;
}

// cell identity used for coverage bookkeeping
using Cell = std::tuple<int, int, std::string>;  // family, param, orbit

Cell slot_cell(const Slot& s) {
  return {static_cast<int>(s.config.family), s.config.param, s.orbit.to_string()};
}

}  // namespace

const std::vector<TableFixtureGroup>& table_fixtures() { return fixture().groups; }

int table_fixture_version() { return fixture().version; }

std::optional<OrbitLabel> instantiate_entry(const TableFixtureEntry& entry, int param, int m) {
  if (entry.parts.empty()) {
    const ExcGroup g = entry.family == GroupFamily::GE6 ? ExcGroup::E6 : ExcGroup::E7;
    return OrbitLabel::exceptional(g, entry.label);
  }
  std::vector<int> parts;
  for (const auto& [coeff, offset] : entry.parts) {
    const int value = coeff * param + offset;
    if (value < 0) return std::nullopt;
    parts.push_back(value);
  }
  const CoefficientConfig config = instantiate(entry.family, param, m);
  Partition p(std::move(parts));
  if (p.size() != config.ambient_size())
    throw std::logic_error("table fixture entry does not fill its ambient group: " +
                           entry_name(entry));
  const auto& family = config.base_orbit.family();
  if (!is_valid(p, family)) return std::nullopt;
  if (!strictly_dominates(p, config.base_orbit.partition())) return std::nullopt;
  return OrbitLabel::classical(family, std::move(p));
}

MatchReport match_tables(const TableSet& tables, const SolveOptions& opts) {
  MatchReport report;
  std::map<TableGroupKey, const TableFixtureGroup*> expected_groups;
  for (const TableFixtureGroup& g : table_fixtures())
    if (g.m == tables.m) expected_groups[g.key] = &g;

  // Expected cells: every legal instantiation of every fixture entry whose
  // contribution matches its slot of the pattern.
  std::map<TableGroupKey, std::vector<std::set<Cell>>> expected;
  for (const auto& [key, group] : expected_groups) {
    auto& slots = expected[key];
    slots.resize(group->slots.size());
    for (size_t si = 0; si < group->slots.size(); ++si) {
      for (const TableFixtureEntry& entry : group->slots[si]) {
        const bool parametric = family_has_param(entry.family);
        const int lo = parametric ? tables.params.lo : 0;
        const int hi = parametric ? tables.params.hi : 0;
        for (int q = lo; q <= hi; ++q) {
          auto orbit = instantiate_entry(entry, q, tables.m);
          if (!orbit) continue;
          const CoefficientConfig config = instantiate(entry.family, q, tables.m);
          if (half_dim(*orbit) - config.dim_u != key.pattern[si]) continue;
          if (si == 0) {
            // cuspidal slot legality
            if (entry.family == GroupFamily::GL && orbit->partition().length() != 1) continue;
            if (entry.family == GroupFamily::GE6 && opts.ge6_cuspidal_restriction &&
                (orbit->label() == "D5" || orbit->label() == "D5(a1)"))
              continue;
          }
          slots[si].insert({static_cast<int>(entry.family), q, orbit->to_string()});
        }
      }
    }
  }

  // Observed rows: every slot must instantiate some fixture entry.
  std::map<TableGroupKey, std::vector<std::set<Cell>>> covered;
  for (const auto& [key, rows] : tables.groups) {
    auto eg = expected_groups.find(key);
    for (const SolutionRow& row : rows) {
      if (row.open_regime) continue;
      if (eg == expected_groups.end()) {
        report.unexpected.push_back("no expected family group for " + key.to_string() + ": " +
                                    row.to_string());
        continue;
      }
      bool row_ok = true;
      for (size_t si = 0; si < row.slots.size(); ++si) {
        const Slot& slot = row.slots[si];
        bool matched = false;
        for (const TableFixtureEntry& entry : eg->second->slots[si]) {
          if (entry.family != slot.config.family) continue;
          auto orbit = instantiate_entry(entry, slot.config.param, tables.m);
          if (orbit && *orbit == slot.orbit) {
            matched = true;
            break;
          }
        }
        if (!matched) row_ok = false;
      }
      if (!row_ok) {
        report.unexpected.push_back("row outside the expected families: " + row.to_string());
        continue;
      }
      auto& cov = covered[key];
      cov.resize(row.slots.size());
      for (size_t si = 0; si < row.slots.size(); ++si) cov[si].insert(slot_cell(row.slots[si]));
    }
  }

  // Coverage: every expected cell must have been produced.
  for (const auto& [key, slots] : expected) {
    const auto cov = covered.find(key);
    for (size_t si = 0; si < slots.size(); ++si) {
      for (const Cell& cell : slots[si]) {
        const bool seen = cov != covered.end() && si < cov->second.size() &&
                          cov->second[si].count(cell) > 0;
        if (!seen) {
          const auto& [fam, q, orbit] = cell;
          report.missing.push_back(key.to_string() + " slot " + std::to_string(si + 1) + ": " +
                                   std::string(family_name(static_cast<GroupFamily>(fam))) +
                                   " param " + std::to_string(q) + " orbit " + orbit);
        }
      }
    }
  }

  report.ok = report.missing.empty() && report.unexpected.empty();
  report.notes.push_back("fixture version " + std::to_string(table_fixture_version()));
  return report;
}

}  // namespace dimeq
