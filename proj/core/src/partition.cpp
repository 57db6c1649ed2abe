#include "dimeq/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "dimeq/orbit.hpp"

namespace dimeq {

Partition::Partition(std::vector<int> raw) : parts_(std::move(raw)) {
  for (int x : parts_) {
    if (x < 0) throw std::invalid_argument("partition part is negative");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> raw)
    : Partition(std::vector<int>(raw)) {}

int Partition::part(int i) const {
  if (i < 0) throw std::invalid_argument("negative part index");
  return i < length() ? parts_[static_cast<size_t>(i)] : 0;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

Partition make_partition(std::span<const int> raw) {
  return Partition(std::vector<int>(raw.begin(), raw.end()));
}

Partition transpose(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> s(static_cast<size_t>(p.parts()[0]));
  for (int i = 1; i <= p.parts()[0]; ++i) {
    int count = 0;
    for (int x : p.parts())
      if (x >= i) ++count;
    s[static_cast<size_t>(i - 1)] = count;
  }
  return Partition(std::move(s));
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance compares partitions of equal size");
  int sa = 0, sb = 0;
  const int len = std::max(a.length(), b.length());
  for (int t = 0; t < len; ++t) {
    sa += a.part(t);
    sb += b.part(t);
    if (sa < sb) return false;
  }
  return true;
}

bool strictly_dominates(const Partition& a, const Partition& b) {
  return a != b && dominates(a, b);
}

Partition add(const Partition& a, const Partition& b) {
  const int len = std::max(a.length(), b.length());
  std::vector<int> sum(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) sum[static_cast<size_t>(i)] = a.part(i) + b.part(i);
  return Partition(std::move(sum));
}

Partition doubled(const Partition& p) {
  std::vector<int> parts = p.parts();
  for (int& x : parts) x *= 2;
  return Partition(std::move(parts));
}

ClassicalFamily gl(int n) { return {FamilyTag::GL, n}; }
ClassicalFamily gsp(int two_n) { return {FamilyTag::GSp, two_n}; }
ClassicalFamily gso(int m) { return {FamilyTag::GSO, m}; }

bool is_valid(const Partition& p, const ClassicalFamily& family) {
  if (p.size() != family.ambient) return false;
  if (family.tag == FamilyTag::GL) return true;
  const int bad_parity = family.tag == FamilyTag::GSp ? 1 : 0;
  const auto& parts = p.parts();
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % 2 == bad_parity && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

namespace {

void gen_partitions(int n, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int first = std::min(n, max_part); first >= 1; --first) {
    cur.push_back(first);
    gen_partitions(n - first, first, max_len < 0 ? -1 : max_len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_len) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_dominating(const Partition& base,
                                             const ClassicalFamily& family) {
  if (!is_valid(base, family))
    throw std::invalid_argument("partitions_dominating: base not valid for family");
  // A partition of the same size dominating `base` has at most base.length()
  // parts (the full prefix sum is already saturated there).
  std::vector<Partition> out;
  for (Partition& p : partitions_of(base.size(), base.length())) {
    if (p != base && dominates(p, base) && is_valid(p, family))
      out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [&](const Partition& a, const Partition& b) {
    const int da = classical_orbit_dim(a, family);
    const int db = classical_orbit_dim(b, family);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

}  // namespace dimeq
