#pragma once

#include <string>
#include <vector>

#include "dimeq/catalog.hpp"

namespace dimeq {

enum class Role { Cuspidal, Automorphic, Eisenstein };

std::string_view role_name(Role role);

/// Whether a classified row is known to yield a nonzero global unipotent
/// integral. Filled in for m = 2 rows by the labeling pass; everything else
/// stays unknown.
enum class Vanishing { Unknown, NonzeroUnipotent, NotUnipotent };

std::string_view vanishing_name(Vanishing v);

/// One factor of a classified integral: its coefficient configuration and the
/// orbit attached to the representation, which must lie strictly above the
/// configuration's base orbit.
struct Slot {
  Role role;
  CoefficientConfig config;
  OrbitLabel orbit;
  int contribution;

  friend bool operator==(const Slot& a, const Slot& b) {
    return a.role == b.role && a.config.family == b.config.family &&
           a.config.param == b.config.param && a.orbit == b.orbit;
  }
};

/// One solution of the dimension equation: ordered slots (cuspidal first,
/// Eisenstein last), per-slot contributions summing to m^2 - 1.
struct SolutionRow {
  int m = 0;
  std::vector<Slot> slots;
  int total = 0;
  Vanishing status = Vanishing::Unknown;
  bool open_regime = false;  // found only in the unbounded m >= 4, k = 1 regime

  int length() const { return static_cast<int>(slots.size()); }
  std::vector<int> pattern() const;
  std::string to_string() const;
};

}  // namespace dimeq
