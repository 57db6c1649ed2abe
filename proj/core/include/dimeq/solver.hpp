#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dimeq/solver_types.hpp"

namespace dimeq {

struct SolveOptions {
  /// Cuspidal GE6 slots exclude the orbit labels D5 and D5(a1) (no cuspidal
  /// representation carries them). The classify/tables CLI exposes this as
  /// --disable-lemma1 to show which rows the restriction removes.
  bool ge6_cuspidal_restriction = true;
  /// For m >= 4 the k = 1 cuspidal GL slot leaves the equation unbounded; such
  /// rows are only enumerated (within the given parameter bounds) when this is
  /// set, and are marked open_regime with status unknown.
  bool allow_open_regime = false;
  /// Extra cap on the number of slots; 0 means "derive from the equation".
  int l_max = 0;
};

struct ParamRange {
  int lo = 1;
  int hi = 6;
};

struct SlotSpec {
  Role role;
  GroupFamily family;
  int param;  // ignored for GE6/GE7
};

/// All orbits strictly above the configuration's base with contribution
/// exactly `c`: enumerated partitions for the classical families, the fixture
/// closure list for GE6/GE7.
std::vector<OrbitLabel> admissible_orbits(const CoefficientConfig& config, int c);

/// Role-filtered orbit candidates for one slot, with their contributions.
/// Cuspidal GL slots are pinned to the regular orbit; cuspidal GE6 slots drop
/// D5/D5(a1) under the default options.
std::vector<std::pair<OrbitLabel, int>> slot_orbits(const CoefficientConfig& config, Role role,
                                                    const SolveOptions& opts = {});

/// Every assignment of orbits to the given slots satisfying the slot
/// invariants with contributions summing to m^2 - 1. The first spec must be
/// cuspidal and the last Eisenstein (throws otherwise); deterministic order;
/// an empty result is legal.
std::vector<SolutionRow> solve(int m, std::span<const SlotSpec> specs,
                               const SolveOptions& opts = {});

struct TableGroupKey {
  int l;
  std::vector<int> pattern;
  auto operator<=>(const TableGroupKey&) const = default;
  std::string to_string() const;
};

/// Classified rows grouped by (length, contribution pattern), after
/// canonicalization (cuspidal first, Eisenstein last, middle slots sorted).
struct TableSet {
  int m = 0;
  ParamRange params;
  std::map<TableGroupKey, std::vector<SolutionRow>> groups;

  int row_count() const;
  int max_length() const;
};

/// Exhaustive enumeration over all catalog families and parameters in range.
TableSet enumerate_tables(int m, ParamRange params, const SolveOptions& opts = {});

/// Outcome of checking a TableSet against the closed-form family fixtures
/// (tables_expected.json). Open-regime rows are excluded from matching.
struct MatchReport {
  bool ok = false;
  std::vector<std::string> missing;     // expected instantiations never produced
  std::vector<std::string> unexpected;  // produced rows outside every fixture family
  std::vector<std::string> notes;
};

MatchReport match_tables(const TableSet& tables, const SolveOptions& opts = {});

/// Parsed closed-form fixture (shared by the matcher and the CLI).
struct TableFixtureEntry {
  GroupFamily family;
  std::vector<std::pair<int, int>> parts;  // affine forms coeff*param + offset
  std::string label;                       // exceptional label when parts is empty
};
struct TableFixtureGroup {
  int m;
  TableGroupKey key;
  std::vector<std::vector<TableFixtureEntry>> slots;
};
const std::vector<TableFixtureGroup>& table_fixtures();
int table_fixture_version();
/// Instantiate a fixture entry at a parameter; nullopt when a part goes
/// negative or the result is not an orbit strictly above the family's base.
std::optional<OrbitLabel> instantiate_entry(const TableFixtureEntry& entry, int param, int m);

/// Report for the cuspidal-depth check: solve() must come back empty whenever
/// the cuspidal GL slot has k >= 3, and the cuspidal GL contribution must equal
/// k*m*(m-1)/2 exactly.
struct CuspidalBoundReport {
  bool no_solutions_for_deep_k = true;
  bool contribution_identity = true;
  std::vector<std::string> counterexamples;
  bool ok() const { return no_solutions_for_deep_k && contribution_identity; }
};

CuspidalBoundReport verify_cuspidal_bound(std::span<const int> ms, std::span<const int> ks,
                                          int l_max, ParamRange params);

/// Largest number of slots over all rows found for this m and range.
int max_length(int m, ParamRange params, const SolveOptions& opts = {});

nlohmann::json to_json(const Slot& slot);
nlohmann::json to_json(const SolutionRow& row);
nlohmann::json to_json(const TableSet& tables);
nlohmann::json to_json(const MatchReport& report);

}  // namespace dimeq
