#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dimeq {

enum class RootSystemType { E6, E7 };

/// Root expressed by its integer coefficients over the simple basis,
/// matching the digit-string notation "0101000" (position i = alpha_{i+1},
/// Bourbaki node numbering).
using RootVec = std::vector<int>;

/// Integer-exact E6/E7 root system: positive roots, simple reflections, and
/// parabolic bookkeeping. Immutable once built.
class RootSystem {
 public:
  static const RootSystem& get(RootSystemType type);

  RootSystemType type() const { return type_; }
  int rank() const { return rank_; }
  /// Deterministic order: by height, then lexicographic.
  std::span<const RootVec> positive_roots() const { return positive_; }
  bool is_root(const RootVec& v) const;
  bool is_positive_root(const RootVec& v) const;
  RootVec simple_root(int i) const;  // i is 1-based
  /// Reflection in the simple root alpha_i (1-based).
  RootVec simple_reflection(int i, RootVec beta) const;
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }

 private:
  explicit RootSystem(RootSystemType type);
  RootSystemType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVec> positive_;
};

/// Simple reflection indices (1-based), applied rightmost first, matching the
/// convention w = w_a w_b w_c acting as w_a(w_b(w_c(root))).
struct WeylWord {
  std::vector<int> word;
};

/// Image of `root` under the word. Throws std::invalid_argument if `root` is
/// not a root of the system.
RootVec apply_weyl_word(const RootSystem& rs, const WeylWord& w, RootVec root);

/// Number of positive roots outside the rational span of the Levi generators.
/// Generators may be arbitrary roots, not just simple ones.
int unipotent_radical_dim(const RootSystem& rs, std::span<const RootVec> levi_generators);
/// Convenience overload for a Levi generated by simple roots (1-based indices).
int unipotent_radical_dim(const RootSystem& rs, std::span<const int> levi_simple_roots);

/// An additive character on a unipotent group, described combinatorially by
/// the roots carrying a unit coefficient.
struct CharacterSupport {
  std::vector<RootVec> entries;
};

/// True iff every support vector is a positive root of the system.
bool verify_character_support(const RootSystem& rs, const CharacterSupport& support);

/// Parse "0101000" into a coefficient vector of the system's rank. Throws on a
/// length mismatch or a non-digit.
RootVec parse_root_digits(const RootSystem& rs, std::string_view digits);
std::string root_digits(const RootVec& v);

}  // namespace dimeq
