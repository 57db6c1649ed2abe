#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dimeq/partition.hpp"

namespace dimeq {

enum class ExcGroup { E6, E7 };

std::string_view exc_group_name(ExcGroup g);
ExcGroup parse_exc_group(std::string_view name);

struct ExceptionalOrbit {
  ExcGroup group;
  std::string label;  // Bala-Carter name, e.g. "E7(a2)"
  int dim;            // complex orbit dimension
  bool anchored;      // pinned by an independent cross-check, not just transcription
  std::vector<std::string> greater_than;  // labels strictly below in closure order
};

/// Curated E6/E7 orbit table, loaded once from the copy of
/// data/orbits_exceptional.json embedded at build time.
class ExceptionalTable {
 public:
  static const ExceptionalTable& instance();
  /// Parse from JSON text (used by tests to check the shipped file against the
  /// embedded copy). Throws std::invalid_argument on malformed input.
  static ExceptionalTable parse(std::string_view json_text);

  int version() const { return version_; }
  std::span<const ExceptionalOrbit> all(ExcGroup g) const;
  bool contains(ExcGroup g, std::string_view label) const;
  /// Throws std::out_of_range for an unknown label.
  const ExceptionalOrbit& at(ExcGroup g, std::string_view label) const;
  /// Strict closure order restricted to the table's labels.
  bool greater(ExcGroup g, std::string_view a, std::string_view b) const;
  /// Orbits strictly greater than `base`, sorted by dimension then label.
  std::vector<const ExceptionalOrbit*> above(ExcGroup g, std::string_view base) const;

 private:
  int version_ = 0;
  std::vector<ExceptionalOrbit> e6_;
  std::vector<ExceptionalOrbit> e7_;
};

/// A nilpotent orbit label: a partition for the classical families, a
/// Bala-Carter name with cached dimension for E6/E7.
class OrbitLabel {
 public:
  /// Throws std::invalid_argument if the partition is not valid for `family`.
  static OrbitLabel classical(ClassicalFamily family, Partition p);
  /// Throws std::out_of_range for a label missing from the fixture.
  static OrbitLabel exceptional(ExcGroup g, std::string_view label);

  bool is_classical() const { return classical_; }
  const ClassicalFamily& family() const;
  const Partition& partition() const;
  ExcGroup group() const;
  const std::string& label() const;

  /// "(4,2)" for classical, "E7(a2)" for exceptional.
  std::string to_string() const;

  friend bool operator==(const OrbitLabel&, const OrbitLabel&);
  friend bool operator<(const OrbitLabel&, const OrbitLabel&);

 private:
  OrbitLabel() = default;
  bool classical_ = true;
  ClassicalFamily family_{FamilyTag::GL, 0};
  Partition partition_;
  ExcGroup group_ = ExcGroup::E6;
  std::string label_;
  int exc_dim_ = 0;
};

/// Complex dimension of the classical orbit with this partition; always even.
/// GL_n: n^2 - sum s_i^2; Sp_2N: 2N^2 + N - (sum s_i^2)/2 - #odd/2;
/// SO_M: (M^2 - M)/2 - (sum s_i^2 - #odd)/2, where s is the transpose.
int classical_orbit_dim(const Partition& p, const ClassicalFamily& family);

int orbit_dim(const OrbitLabel& o);
int half_dim(const OrbitLabel& o);

/// Strict closure order: dominance for classical orbits (same family), the
/// fixture order for exceptional ones. Throws on a group/family mismatch.
bool strictly_greater(const OrbitLabel& a, const OrbitLabel& b);

/// half_dim(orbit) - half_dim(base); positive by strictness. Throws
/// std::invalid_argument unless `orbit` is strictly greater than `base`.
int contribution(const OrbitLabel& base, const OrbitLabel& orbit);

}  // namespace dimeq
