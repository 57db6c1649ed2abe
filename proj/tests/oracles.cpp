#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace dimeq::testing {

namespace {

struct ClassicalRoot {
  int i, j;   // 0-based coordinates, i < j (or i == j for the long C roots)
  int sign;   // +1: e_i + e_j (or 2e_i), -1: e_i - e_j
};

std::vector<ClassicalRoot> c_positive_roots(int n_cap) {
  std::vector<ClassicalRoot> roots;
  for (int i = 0; i < n_cap; ++i) {
    for (int j = i + 1; j < n_cap; ++j) {
      roots.push_back({i, j, -1});
      roots.push_back({i, j, +1});
    }
    roots.push_back({i, i, +1});  // 2e_i
  }
  return roots;
}

std::vector<ClassicalRoot> d_positive_roots(int n_cap) {
  std::vector<ClassicalRoot> roots;
  for (int i = 0; i < n_cap; ++i)
    for (int j = i + 1; j < n_cap; ++j) {
      roots.push_back({i, j, -1});
      roots.push_back({i, j, +1});
    }
  return roots;
}

}  // namespace

int c_type_gl2_radical(int n) {
  const int n_cap = 2 * n + 1;
  // coordinates 0..2n-1 grouped in GL_2 blocks, coordinate 2n in the Sp_2 block
  auto block = [&](int t) { return t / 2; };
  int outside = 0;
  for (const ClassicalRoot& r : c_positive_roots(n_cap)) {
    bool in_levi = false;
    if (r.sign < 0 && r.i < 2 * n && r.j < 2 * n && block(r.i) == block(r.j)) in_levi = true;
    if (r.i == r.j && r.i == 2 * n) in_levi = true;  // 2e_N inside the Sp_2 factor
    if (!in_levi) ++outside;
  }
  return outside;
}

int d_type_gl2_radical(int n) {
  const int n_cap = 2 * n;
  auto block = [&](int t) { return t / 2; };
  int outside = 0;
  for (const ClassicalRoot& r : d_positive_roots(n_cap)) {
    const bool in_levi = r.sign < 0 && block(r.i) == block(r.j);
    if (!in_levi) ++outside;
  }
  return outside;
}

int c_type_two_block_radical(int n_cap, int gl_block) {
  int outside = 0;
  for (const ClassicalRoot& r : c_positive_roots(n_cap)) {
    bool in_levi = false;
    if (r.sign < 0 && r.i < gl_block && r.j < gl_block) in_levi = true;
    if (r.i >= gl_block && r.j >= gl_block) in_levi = true;  // any root of the Sp factor
    if (!in_levi) ++outside;
  }
  return outside;
}

int d_type_two_block_radical(int n_cap, int gl_block) {
  int outside = 0;
  for (const ClassicalRoot& r : d_positive_roots(n_cap)) {
    bool in_levi = false;
    if (r.sign < 0 && r.i < gl_block && r.j < gl_block) in_levi = true;
    if (r.i >= gl_block && r.j >= gl_block) in_levi = true;
    if (!in_levi) ++outside;
  }
  return outside;
}

namespace {

using Mat = std::vector<std::vector<int>>;

Mat identity(int n) {
  Mat m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mul3(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % 3;
    }
  return c;
}

}  // namespace

bool admissible_f3(int p, int r, const PermutationMatrix& w, const std::vector<int>& z) {
  const int n = 2 * p;
  Mat wm(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) wm[i][w.row_to_col[static_cast<size_t>(i)]] = 1;
  Mat wt(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) wt[w.row_to_col[static_cast<size_t>(i)]][i] = 1;
  Mat zm = identity(n), zi = identity(n);
  for (int t = 0; t < p; ++t) {
    zm[2 * t][2 * t + 1] = ((z[static_cast<size_t>(t)] % 3) + 3) % 3;
    zi[2 * t][2 * t + 1] = (3 - zm[2 * t][2 * t + 1]) % 3;
  }
  const Mat gamma = mul3(wm, zm);
  const Mat gamma_inv = mul3(zi, wt);

  std::vector<std::pair<int, int>> coords;  // 0-based V coordinates
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a / 2 < b / 2) coords.push_back({a, b});

  std::vector<int> values(coords.size(), 0);
  std::function<bool(size_t)> scan = [&](size_t idx) -> bool {
    if (idx == coords.size()) {
      Mat v = identity(n);
      for (size_t t = 0; t < coords.size(); ++t) v[coords[t].first][coords[t].second] = values[t];
      const Mat g = mul3(mul3(gamma, v), gamma_inv);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const int expect = i == j ? 1 : 0;
          if (i < r && j >= r) continue;  // U(P) entries are free
          if (g[i][j] != expect) return false;
        }
      int psi = 0;
      for (int j = 1; j <= p - 1; ++j) {
        psi = (psi + v[2 * j - 2][2 * j]) % 3;      // (2j-1, 2j+1) 1-based
        psi = (psi + v[2 * j - 1][2 * j + 1]) % 3;  // (2j, 2j+2)
      }
      return psi != 0;  // a witness of inadmissibility
    }
    for (int val = 0; val < 3; ++val) {
      values[idx] = val;
      if (scan(idx + 1)) return true;
    }
    return false;
  };
  return !scan(0);
}

std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = std::min(rest, max_part); first >= 1; --first) {
      cur.push_back(first);
      rec(rest - first, first);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominates_prefix(const std::vector<int>& a, const std::vector<int>& b) {
  int sa = 0, sb = 0;
  const size_t len = std::max(a.size(), b.size());
  for (size_t t = 0; t < len; ++t) {
    sa += t < a.size() ? a[t] : 0;
    sb += t < b.size() ? b[t] : 0;
    if (sa < sb) return false;
  }
  return true;
}

}  // namespace dimeq::testing
