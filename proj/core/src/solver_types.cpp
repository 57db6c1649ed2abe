#include "dimeq/solver_types.hpp"

namespace dimeq {

std::string_view role_name(Role role) {
  switch (role) {
    case Role::Cuspidal: return "cuspidal";
    case Role::Automorphic: return "automorphic";
    case Role::Eisenstein: return "eisenstein";
  }
  return "?";
}

std::string_view vanishing_name(Vanishing v) {
  switch (v) {
    case Vanishing::Unknown: return "unknown";
    case Vanishing::NonzeroUnipotent: return "nonzero_unipotent";
    case Vanishing::NotUnipotent: return "not_unipotent";
  }
  return "?";
}

std::vector<int> SolutionRow::pattern() const {
  std::vector<int> out;
  out.reserve(slots.size());
  for (const Slot& s : slots) out.push_back(s.contribution);
  return out;
}

std::string SolutionRow::to_string() const {
  std::string s = "m=" + std::to_string(m) + " [";
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i) s += " | ";
    s += std::string(family_name(slots[i].config.family));
    if (family_has_param(slots[i].config.family))
      s += "(" + std::to_string(slots[i].config.param) + ")";
    s += " " + slots[i].orbit.to_string() + " +" + std::to_string(slots[i].contribution);
  }
  s += "]";
  if (open_regime) s += " open";
  return s;
}

}  // namespace dimeq
