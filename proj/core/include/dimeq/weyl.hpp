#pragma once

#include <span>
#include <string>
#include <vector>

namespace dimeq {

/// Permutation matrix of size n: row i (0-based) has its 1 in column
/// row_to_col[i].
struct PermutationMatrix {
  std::vector<int> row_to_col;

  int size() const { return static_cast<int>(row_to_col.size()); }
  std::vector<int> col_to_row() const;
  /// One-line notation with 1-based images, e.g. "[2,4,1,3]".
  std::string one_line() const;
  friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;
  friend bool operator<(const PermutationMatrix& a, const PermutationMatrix& b) {
    return a.row_to_col < b.row_to_col;
  }
};

/// Throws std::invalid_argument unless row_to_col is a bijection on 0..n-1.
void validate_permutation(const PermutationMatrix& w, int n);

/// Double-coset admissibility scan inside GL_2p: P has Levi GL_r x GL_{2p-r}
/// (p <= r < 2p), V is the block-upper unipotent with 2x2 diagonal blocks, and
/// the character pairs the adjacent block traces: coordinates (2j-1, 2j+1) and
/// (2j, 2j+2) for 1 <= j <= p-1, each with coefficient 1.
struct AdmissibilityContext {
  int p;
  int r;

  AdmissibilityContext(int p, int r);
  int n() const { return 2 * p; }
};

/// A representative w (times the unipotent part z, coordinates r_1..r_p on the
/// diagonal 2x2 blocks) is admissible when the character is trivial on
/// V intersected with gamma^{-1} U(P) gamma. For permutation parts the test is
/// linear: gamma is inadmissible iff some coordinate of the twisted character
/// support lands in the U(P) region with a nonzero coefficient.
bool is_admissible(const AdmissibilityContext& ctx, const PermutationMatrix& w);
bool is_admissible(const AdmissibilityContext& ctx, const PermutationMatrix& w,
                   std::span<const long long> z);

/// The staircase representative with q left-column hooks: blocks L_q'
/// (x_{i,2i-1} = 1) and L_q'' (y_{i,2i} = 1) of height 2p-r-q around
/// I_{2(r-p)+q} and I_q. q = 2p-r gives the plain block swap. Throws on q
/// outside [0, 2p-r].
PermutationMatrix build_wq(int p, int r, int q);

/// Minimal-length representative of the (GL_r x GL_{2p-r})-Weyl orbit of w:
/// both row blocks sorted by column.
PermutationMatrix canonical_rep(const AdmissibilityContext& ctx, const PermutationMatrix& w);

/// Canonical representatives of all admissible orbits, exhaustive over S_2p
/// (desk scale: p <= 4). Sorted; expected to equal the canonicalized
/// {build_wq(p, r, q) : 0 <= q <= 2p-r}.
std::vector<PermutationMatrix> admissible_set(const AdmissibilityContext& ctx);

}  // namespace dimeq
