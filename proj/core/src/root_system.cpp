#include "dimeq/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dimeq {

namespace {

// Bourbaki numbering: chain 1-3-4-5-6(-7), node 2 attached to 4.
constexpr std::pair<int, int> kE6Edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
constexpr std::pair<int, int> kE7Edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};

int height(const RootVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

RootSystem::RootSystem(RootSystemType type) : type_(type) {
  rank_ = type == RootSystemType::E6 ? 6 : 7;
  cartan_.assign(static_cast<size_t>(rank_), std::vector<int>(static_cast<size_t>(rank_), 0));
  for (int i = 0; i < rank_; ++i) cartan_[i][i] = 2;
  const std::span<const std::pair<int, int>> edges =
      type == RootSystemType::E6 ? std::span<const std::pair<int, int>>(kE6Edges)
                                 : std::span<const std::pair<int, int>>(kE7Edges);
  for (auto [a, b] : edges) {
    cartan_[a - 1][b - 1] = -1;
    cartan_[b - 1][a - 1] = -1;
  }

  // Close the simple roots under all simple reflections.
  std::set<RootVec> roots;
  std::vector<RootVec> frontier;
  for (int i = 1; i <= rank_; ++i) {
    RootVec v(static_cast<size_t>(rank_), 0);
    v[static_cast<size_t>(i - 1)] = 1;
    roots.insert(v);
    frontier.push_back(v);
    for (int& x : v) x = -x;
    roots.insert(v);
    frontier.push_back(v);
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& beta : frontier) {
      for (int i = 1; i <= rank_; ++i) {
        RootVec img = simple_reflection(i, beta);
        if (roots.insert(img).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  for (const RootVec& v : roots) {
    if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }))
      positive_.push_back(v);
  }
  std::sort(positive_.begin(), positive_.end(), [](const RootVec& a, const RootVec& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a < b;
  });
}

const RootSystem& RootSystem::get(RootSystemType type) {
  static const RootSystem e6(RootSystemType::E6);
  static const RootSystem e7(RootSystemType::E7);
  return type == RootSystemType::E6 ? e6 : e7;
}

bool RootSystem::is_root(const RootVec& v) const {
  if (static_cast<int>(v.size()) != rank_) return false;
  if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }))
    return is_positive_root(v);
  RootVec neg = v;
  for (int& x : neg) x = -x;
  if (std::any_of(neg.begin(), neg.end(), [](int x) { return x < 0; })) return false;
  return is_positive_root(neg);
}

bool RootSystem::is_positive_root(const RootVec& v) const {
  return std::binary_search(positive_.begin(), positive_.end(), v,
                            [](const RootVec& a, const RootVec& b) {
                              if (height(a) != height(b)) return height(a) < height(b);
                              return a < b;
                            });
}

RootVec RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("simple root index out of range");
  RootVec v(static_cast<size_t>(rank_), 0);
  v[static_cast<size_t>(i - 1)] = 1;
  return v;
}

RootVec RootSystem::simple_reflection(int i, RootVec beta) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("simple reflection index out of range");
  int pairing = 0;
  for (int j = 0; j < rank_; ++j)
    pairing += beta[static_cast<size_t>(j)] * cartan_[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
  beta[static_cast<size_t>(i - 1)] -= pairing;
  return beta;
}

RootVec apply_weyl_word(const RootSystem& rs, const WeylWord& w, RootVec root) {
  if (!rs.is_root(root))
    throw std::invalid_argument("apply_weyl_word: not a root: " + root_digits(root));
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    root = rs.simple_reflection(*it, std::move(root));
  return root;
}

namespace {

// Fraction-free row echelon rank over the rationals (entries stay small).
int int_rank(std::vector<std::vector<long long>> m) {
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long long a = m[r][c], b = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int unipotent_radical_dim(const RootSystem& rs, std::span<const RootVec> levi_generators) {
  std::vector<std::vector<long long>> gens;
  for (const RootVec& g : levi_generators) {
    if (!rs.is_root(g))
      throw std::invalid_argument("Levi generator is not a root: " + root_digits(g));
    gens.emplace_back(g.begin(), g.end());
  }
  const int base_rank = int_rank(gens);
  int outside = 0;
  for (const RootVec& beta : rs.positive_roots()) {
    auto ext = gens;
    ext.emplace_back(beta.begin(), beta.end());
    if (int_rank(std::move(ext)) > base_rank) ++outside;
  }
  return outside;
}

int unipotent_radical_dim(const RootSystem& rs, std::span<const int> levi_simple_roots) {
  std::vector<RootVec> gens;
  for (int i : levi_simple_roots) gens.push_back(rs.simple_root(i));
  return unipotent_radical_dim(rs, gens);
}

bool verify_character_support(const RootSystem& rs, const CharacterSupport& support) {
  return std::all_of(support.entries.begin(), support.entries.end(),
                     [&](const RootVec& v) { return rs.is_positive_root(v); });
}

RootVec parse_root_digits(const RootSystem& rs, std::string_view digits) {
  if (static_cast<int>(digits.size()) != rs.rank())
    throw std::invalid_argument("root digit string has wrong length: " + std::string(digits));
  RootVec v;
  v.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("root digit string has a non-digit: " + std::string(digits));
    v.push_back(c - '0');
  }
  return v;
}

std::string root_digits(const RootVec& v) {
  std::string s;
  for (int x : v) {
    if (x < 0 || x > 9) {
      // fall back to a tuple for out-of-range coefficients
      s = "(";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
      }
      s += ')';
      return s;
    }
    s += static_cast<char>('0' + x);
  }
  return s;
}

}  // namespace dimeq
