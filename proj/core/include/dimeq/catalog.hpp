#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dimeq/orbit.hpp"

namespace dimeq {

/// The ambient-group families whose distinguished Fourier coefficient has
/// stabilizer GL_m with matching center.
enum class GroupFamily { GL, GSp, GSO, GE6, GE7 };

std::string_view family_name(GroupFamily f);
GroupFamily parse_family(std::string_view name);
bool family_has_param(GroupFamily f);

/// One coefficient configuration: ambient family at a concrete parameter, the
/// base orbit the coefficient is attached to, and the dimension of its
/// unipotent group (always half the base orbit dimension).
struct CoefficientConfig {
  GroupFamily family;
  int param;  // k for GL (ambient GL_{km}), n for GSp/GSO; 0 for GE6/GE7
  int m;      // stabilizer rank
  OrbitLabel base_orbit;
  int dim_u;

  /// km for GL, 2(2n+1) for GSp, 4n for GSO, 0 for the exceptional families.
  int ambient_size() const;
  std::string to_string() const;
};

/// Families available for a given stabilizer rank:
/// m >= 4 -> {GL}; m == 3 -> {GL, GE6}; m == 2 -> {GL, GSp, GSO, GE7}.
/// Throws std::invalid_argument for m < 2.
std::vector<GroupFamily> catalog_families(int m);

/// Hook for additional families; the catalog is closed-world and this ships
/// empty.
std::span<const GroupFamily> extra_families(int m);

/// Concrete configuration. Bases: GL -> (k^m); GSp (m=2) -> ((2n+1)^2);
/// GSO (m=2) -> ((2n)^2); GE7 (m=2) -> E6; GE6 (m=3) -> D4. Throws
/// std::invalid_argument on a family/m mismatch or a parameter < 1.
CoefficientConfig instantiate(GroupFamily family, int param, int m);

nlohmann::json to_json(const CoefficientConfig& config);
nlohmann::json to_json(const OrbitLabel& orbit);
nlohmann::json to_json(const Partition& p);

}  // namespace dimeq
