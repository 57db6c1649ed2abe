#include "dimeq/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dimeq {

std::vector<int> PermutationMatrix::col_to_row() const {
  std::vector<int> inv(row_to_col.size(), -1);
  for (size_t i = 0; i < row_to_col.size(); ++i) inv[static_cast<size_t>(row_to_col[i])] = static_cast<int>(i);
  return inv;
}

std::string PermutationMatrix::one_line() const {
  std::string s = "[";
  for (size_t i = 0; i < row_to_col.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(row_to_col[i] + 1);
  }
  s += ']';
  return s;
}

void validate_permutation(const PermutationMatrix& w, int n) {
  if (w.size() != n) throw std::invalid_argument("permutation has the wrong size");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int c : w.row_to_col) {
    if (c < 0 || c >= n || seen[static_cast<size_t>(c)])
      throw std::invalid_argument("not a permutation matrix");
    seen[static_cast<size_t>(c)] = true;
  }
}

AdmissibilityContext::AdmissibilityContext(int p_, int r_) : p(p_), r(r_) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (r < p || r >= 2 * p) throw std::invalid_argument("r must satisfy p <= r < 2p");
}

namespace {

// 1-based coordinate (a, b): entry of the block-upper group V when the 2x2
// blocks of a and b differ.
bool coord_in_v(int a, int b) { return (a + 1) / 2 < (b + 1) / 2; }

// gamma x_{(a,b)} gamma^{-1} lands in U(P) iff column a sits in a top row and
// column b in a bottom row.
bool coord_in_region(const std::vector<int>& col_to_row, int r, int a, int b) {
  return col_to_row[static_cast<size_t>(a - 1)] < r &&
         col_to_row[static_cast<size_t>(b - 1)] >= r;
}

}  // namespace

bool is_admissible(const AdmissibilityContext& ctx, const PermutationMatrix& w) {
  validate_permutation(w, ctx.n());
  const std::vector<int> inv = w.col_to_row();
  for (int j = 1; j <= ctx.p - 1; ++j) {
    if (coord_in_region(inv, ctx.r, 2 * j - 1, 2 * j + 1)) return false;
    if (coord_in_region(inv, ctx.r, 2 * j, 2 * j + 2)) return false;
  }
  return true;
}

bool is_admissible(const AdmissibilityContext& ctx, const PermutationMatrix& w,
                   std::span<const long long> z) {
  validate_permutation(w, ctx.n());
  if (static_cast<int>(z.size()) != ctx.p)
    throw std::invalid_argument("unipotent part needs one coordinate per 2x2 block");
  const std::vector<int> inv = w.col_to_row();
  // Support of the character twisted by the unipotent part: the trace pairs
  // keep coefficient 1, and conjugation adds the coordinates (2j, 2j+1) with
  // coefficient z_{j+1} - z_j.
  for (int j = 1; j <= ctx.p - 1; ++j) {
    if (coord_in_region(inv, ctx.r, 2 * j - 1, 2 * j + 1)) return false;
    if (coord_in_region(inv, ctx.r, 2 * j, 2 * j + 2)) return false;
    if (z[static_cast<size_t>(j)] != z[static_cast<size_t>(j - 1)]) {
      if (coord_in_v(2 * j, 2 * j + 1) && coord_in_region(inv, ctx.r, 2 * j, 2 * j + 1))
        return false;
    }
  }
  return true;
}

PermutationMatrix build_wq(int p, int r, int q) {
  AdmissibilityContext ctx(p, r);
  if (q < 0 || q > 2 * p - r) throw std::invalid_argument("q must lie in [0, 2p-r]");
  const int n = 2 * p;
  const int h = 2 * p - r - q;  // height of the L' and L'' blocks
  PermutationMatrix w{std::vector<int>(static_cast<size_t>(n), -1)};
  int row = 0;
  // L_q': x_{i,2i-1} inside the middle column block (offset q).
  for (int i = 1; i <= h; ++i) w.row_to_col[static_cast<size_t>(row++)] = q + 2 * i - 1 - 1;
  // I_{2(r-p)+q} in the right column block (offset q + 2h).
  for (int i = 1; i <= 2 * (r - p) + q; ++i)
    w.row_to_col[static_cast<size_t>(row++)] = q + 2 * h + i - 1;
  // I_q in the left column block.
  for (int i = 1; i <= q; ++i) w.row_to_col[static_cast<size_t>(row++)] = i - 1;
  // L_q'': y_{i,2i} inside the middle column block.
  for (int i = 1; i <= h; ++i) w.row_to_col[static_cast<size_t>(row++)] = q + 2 * i - 1;
  validate_permutation(w, n);
  return w;
}

PermutationMatrix canonical_rep(const AdmissibilityContext& ctx, const PermutationMatrix& w) {
  validate_permutation(w, ctx.n());
  PermutationMatrix out{std::vector<int>(static_cast<size_t>(ctx.n()))};
  std::vector<int> top(w.row_to_col.begin(), w.row_to_col.begin() + ctx.r);
  std::vector<int> bottom(w.row_to_col.begin() + ctx.r, w.row_to_col.end());
  std::sort(top.begin(), top.end());
  std::sort(bottom.begin(), bottom.end());
  std::copy(bottom.begin(), bottom.end(),
            std::copy(top.begin(), top.end(), out.row_to_col.begin()));
  return out;
}

std::vector<PermutationMatrix> admissible_set(const AdmissibilityContext& ctx) {
  if (ctx.p > 4) throw std::invalid_argument("exhaustive scan is limited to p <= 4");
  std::vector<int> perm(static_cast<size_t>(ctx.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<PermutationMatrix> reps;
  do {
    PermutationMatrix w{perm};
    if (is_admissible(ctx, w)) reps.insert(canonical_rep(ctx, w));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {reps.begin(), reps.end()};
}

}  // namespace dimeq
