#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dimeq/weyl.hpp"
#include "oracles.hpp"

using namespace dimeq;

namespace {

PermutationMatrix identity_perm(int n) {
  PermutationMatrix w{std::vector<int>(static_cast<size_t>(n))};
  std::iota(w.row_to_col.begin(), w.row_to_col.end(), 0);
  return w;
}

PermutationMatrix compose_left(const PermutationMatrix& u, const PermutationMatrix& w) {
  // (uw)(row) = w(u(row)): left multiplication permutes rows inside the blocks
  PermutationMatrix out{std::vector<int>(w.row_to_col.size())};
  for (size_t i = 0; i < w.row_to_col.size(); ++i)
    out.row_to_col[i] = w.row_to_col[static_cast<size_t>(u.row_to_col[i])];
  return out;
}

}  // namespace

TEST_CASE("staircase representatives") {
  // the top value of q is the plain block swap
  for (int p = 1; p <= 4; ++p)
    for (int r = p; r < 2 * p; ++r) {
      const PermutationMatrix swap = build_wq(p, r, 2 * p - r);
      for (int i = 0; i < r; ++i) CHECK(swap.row_to_col[static_cast<size_t>(i)] == 2 * p - r + i);
      for (int i = 0; i < 2 * p - r; ++i)
        CHECK(swap.row_to_col[static_cast<size_t>(r + i)] == i);
      for (int q = 0; q <= 2 * p - r; ++q) validate_permutation(build_wq(p, r, q), 2 * p);
    }
  // explicit q = 0 staircase at p = 2, r = 3
  CHECK(build_wq(2, 3, 0).row_to_col == std::vector<int>{0, 2, 3, 1});
  CHECK_THROWS_AS(build_wq(2, 3, 2), std::invalid_argument);
}

TEST_CASE("admissibility of pinned elements") {
  const AdmissibilityContext ctx(2, 3);
  CHECK(is_admissible(ctx, build_wq(2, 3, 1)));  // block swap
  CHECK(is_admissible(ctx, build_wq(2, 3, 0)));
  CHECK_FALSE(is_admissible(ctx, identity_perm(4)));
  PermutationMatrix bad{{0, 0, 1, 2}};
  CHECK_THROWS_AS(is_admissible(ctx, bad), std::invalid_argument);
}

TEST_CASE("admissible sets match the staircase family") {
  for (int p = 1; p <= 3; ++p) {
    for (int r = p; r < 2 * p; ++r) {
      const AdmissibilityContext ctx(p, r);
      const auto found = admissible_set(ctx);
      CHECK(static_cast<int>(found.size()) == 2 * p - r + 1);
      std::vector<PermutationMatrix> expected;
      for (int q = 0; q <= 2 * p - r; ++q)
        expected.push_back(canonical_rep(ctx, build_wq(p, r, q)));
      std::sort(expected.begin(), expected.end());
      CHECK(found == expected);
    }
  }
}

TEST_CASE("admissibility is constant on left Levi orbits") {
  std::mt19937 rng(7);
  for (int p : {2, 3}) {
    for (int r = p; r < 2 * p; ++r) {
      const AdmissibilityContext ctx(p, r);
      std::vector<int> perm(static_cast<size_t>(2 * p));
      std::iota(perm.begin(), perm.end(), 0);
      for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const PermutationMatrix w{perm};
        const bool adm = is_admissible(ctx, w);
        // left factor: permute rows within {0..r-1} and {r..2p-1}
        std::vector<int> u(static_cast<size_t>(2 * p));
        std::iota(u.begin(), u.end(), 0);
        std::shuffle(u.begin(), u.begin() + r, rng);
        std::shuffle(u.begin() + r, u.end(), rng);
        CHECK(is_admissible(ctx, compose_left(PermutationMatrix{u}, w)) == adm);
        CHECK(is_admissible(ctx, canonical_rep(ctx, w)) == adm);
      }
    }
  }
}

TEST_CASE("inadmissible stays inadmissible under the unipotent part") {
  for (int p : {2, 3}) {
    std::vector<int> perm(static_cast<size_t>(2 * p));
    std::iota(perm.begin(), perm.end(), 0);
    for (int r = p; r < 2 * p; ++r) {
      const AdmissibilityContext ctx(p, r);
      do {
        const PermutationMatrix w{perm};
        if (is_admissible(ctx, w)) continue;
        std::vector<long long> z(static_cast<size_t>(p), 0);
        for (int mask = 0; mask < 1 << p; ++mask) {
          for (int t = 0; t < p; ++t) z[static_cast<size_t>(t)] = (mask >> t) & 1;
          CHECK_FALSE(is_admissible(ctx, w, z));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("the unipotent part can break admissibility (one direction only)") {
  // the q = 1 staircase at p = 2, r = 2 is admissible bare but not with z
  const AdmissibilityContext ctx(2, 2);
  const PermutationMatrix w = build_wq(2, 2, 1);
  CHECK(is_admissible(ctx, w));
  const std::vector<long long> z{0, 1};
  CHECK_FALSE(is_admissible(ctx, w, z));
}

TEST_CASE("linear test agrees with the finite-field group scan (p = 2)") {
  std::vector<int> perm{0, 1, 2, 3};
  for (int r : {2, 3}) {
    const AdmissibilityContext ctx(2, r);
    do {
      const PermutationMatrix w{perm};
      for (int z0 = 0; z0 < 3; ++z0)
        for (int z1 = 0; z1 < 3; ++z1) {
          const std::vector<long long> z{z0, z1};
          const bool fast = is_admissible(ctx, w, z);
          const bool slow = testing::admissible_f3(2, r, w, {z0, z1});
          CHECK(fast == slow);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("count law across the full scan") {
  for (int p = 1; p <= 4; ++p)
    for (int r = p; r < 2 * p; ++r)
      CHECK(static_cast<int>(admissible_set(AdmissibilityContext(p, r)).size()) ==
            2 * p - r + 1);
}
