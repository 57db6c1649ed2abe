#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dimeq {

/// Integer partition: weakly decreasing positive parts. Zero parts supplied at
/// construction are dropped; the empty partition (size 0) is legal. Immutable
/// after construction.
class Partition {
 public:
  Partition() = default;
  /// Sorts descending and drops zeros. Throws std::invalid_argument on a
  /// negative entry.
  explicit Partition(std::vector<int> raw);
  Partition(std::initializer_list<int> raw);

  const std::vector<int>& parts() const { return parts_; }
  /// Sum of parts.
  int size() const { return size_; }
  /// Number of (positive) parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// i-th part, 0-based, zero-padded past the end.
  int part(int i) const;
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part vectors.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  /// "(4,2)"; the empty partition prints as "()".
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition make_partition(std::span<const int> raw);

/// Conjugate partition: s_i = #{j : p_j >= i}.
Partition transpose(const Partition& p);

/// Dominance order on partitions of equal size: every prefix sum of `a` is >=
/// the matching prefix sum of `b`. Throws std::invalid_argument on a size
/// mismatch.
bool dominates(const Partition& a, const Partition& b);
bool strictly_dominates(const Partition& a, const Partition& b);

/// Componentwise sum after zero-padding the shorter argument.
Partition add(const Partition& a, const Partition& b);

/// Every part doubled.
Partition doubled(const Partition& p);

enum class FamilyTag { GL, GSp, GSO };

/// Which classical group a partition labels an orbit of. `ambient` is the size
/// of the partitions the group carries: n for GL_n, 2N for GSp_2N, M for GSO_M.
struct ClassicalFamily {
  FamilyTag tag;
  int ambient;
};

ClassicalFamily gl(int n);
ClassicalFamily gsp(int two_n);
ClassicalFamily gso(int m);

/// GL: always true. GSp: every odd part has even multiplicity. GSO: every even
/// part has even multiplicity. Requires p.size() == family.ambient.
///
/// Very even GSO partitions (all parts even) split into two orbits I/II; they
/// are treated as a single label here because every quantity this library
/// computes (dimensions) coincides on the pair.
bool is_valid(const Partition& p, const ClassicalFamily& family);

/// All partitions of n, descending-lex order, optionally with at most max_len
/// parts (-1 for no bound).
std::vector<Partition> partitions_of(int n, int max_len = -1);

/// All family-valid partitions of base.size() strictly dominating `base`,
/// sorted by orbit dimension ascending, then lexicographically.
std::vector<Partition> partitions_dominating(const Partition& base,
                                             const ClassicalFamily& family);

}  // namespace dimeq
