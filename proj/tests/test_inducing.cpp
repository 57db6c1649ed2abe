#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "dimeq/inducing.hpp"
#include "dimeq/solver.hpp"
#include "oracles.hpp"

using namespace dimeq;

TEST_CASE("induced orbits") {
  CHECK(induce(GroupFamily::GL, Partition{2, 1}, Partition{2, 1}).orbit == Partition{4, 2});
  const auto gsp = induce(GroupFamily::GSp, Partition{2, 1}, Partition{4, 4});
  CHECK(gsp.orbit == Partition{8, 6});
  CHECK(gsp.valid);
  CHECK(induce(GroupFamily::GL, Partition{3, 1}, Partition{}).orbit == Partition{3, 1});
  // the diagnostic flag reports sums that need a collapse
  const auto bad = induce(GroupFamily::GSp, Partition{1}, Partition{3, 1});
  CHECK(bad.orbit == Partition{5, 1});
  CHECK_FALSE(bad.valid);
}

TEST_CASE("inducing data for GL_6 with target (4,2)") {
  const Partition target{4, 2};
  const auto data = classify_inducing_data(GroupFamily::GL, target);
  CHECK(data.size() == 7);
  for (const InducingDatum& d : data) {
    CHECK(add(d.tau1, d.tau2) == target);
    CHECK(d.i() >= 0);
    CHECK(d.i() <= 2);
  }
  CHECK(data == closed_form_inducing_data(GroupFamily::GL, target));
  // the stated i = 1 instances
  const InducingDatum mid{GroupFamily::GL, target, 3, Partition{2, 1}, Partition{2, 1}};
  CHECK(std::find(data.begin(), data.end(), mid) != data.end());
  CHECK(mid.a() == 2);
}

TEST_CASE("inducing data for GSp, target ((2p+2)(2p)) at p=2") {
  const Partition target{6, 4};
  const auto data = classify_inducing_data(GroupFamily::GSp, target);
  CHECK(data.size() == 5);
  for (const InducingDatum& d : data) {
    CHECK(add(doubled(d.tau1), d.tau2) == target);
    CHECK((d.i() == 0 || d.i() == 1));
  }
  CHECK(data == closed_form_inducing_data(GroupFamily::GSp, target));
  // Siegel degeneration: trivial classical factor with an empty orbit
  const InducingDatum siegel{GroupFamily::GSp, target, 5, Partition{3, 2}, Partition{}};
  CHECK(std::find(data.begin(), data.end(), siegel) != data.end());
}

TEST_CASE("degenerate and invalid targets are rejected") {
  CHECK_THROWS_AS(classify_inducing_data(GroupFamily::GL, Partition{3, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_inducing_data(GroupFamily::GL, Partition{3, 2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_inducing_data(GroupFamily::GSp, Partition{5, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_inducing_data(GroupFamily::GE7, Partition{2}),
                  std::invalid_argument);
}

TEST_CASE("brute force equals closed forms, p <= 8") {
  for (int p = 1; p <= 8; ++p) {
    for (int c : {1, 2}) {
      if (p - c >= 0) {
        const Partition t{p + c, p - c};
        CHECK(classify_inducing_data(GroupFamily::GL, t) ==
              closed_form_inducing_data(GroupFamily::GL, t));
      }
      {
        const Partition t{2 * p + 2 * c, 2 * p + 2 - 2 * c};
        CHECK(classify_inducing_data(GroupFamily::GSp, t) ==
              closed_form_inducing_data(GroupFamily::GSp, t));
      }
      if (2 * p - 2 * c + 1 >= 0) {
        const Partition t{2 * p + 2 * c - 1, 2 * p - 2 * c + 1};
        CHECK(classify_inducing_data(GroupFamily::GSO, t) ==
              closed_form_inducing_data(GroupFamily::GSO, t));
      }
    }
  }
}

TEST_CASE("round trip: every datum re-induces its target") {
  for (int p = 1; p <= 6; ++p) {
    for (GroupFamily f : {GroupFamily::GL, GroupFamily::GSp, GroupFamily::GSO}) {
      for (int c : {1, 2}) {
        std::vector<int> raw;
        if (f == GroupFamily::GL) raw = {p + c, p - c};
        if (f == GroupFamily::GSp) raw = {2 * p + 2 * c, 2 * p + 2 - 2 * c};
        if (f == GroupFamily::GSO) raw = {2 * p + 2 * c - 1, 2 * p - 2 * c + 1};
        if (std::min(raw[0], raw[1]) < 0) continue;
        const Partition target(std::move(raw));
        for (const InducingDatum& d : classify_inducing_data(f, target))
          CHECK(induce(f, d.tau1, d.tau2).orbit == target);
      }
    }
  }
}

TEST_CASE("induced dimension identity, all families") {
  // worked instance: half of (4,2) in GL_6 = 13 = 2 + 2 + 9
  const InducingDatum gl_datum{GroupFamily::GL, Partition{4, 2}, 3, Partition{2, 1},
                               Partition{2, 1}};
  CHECK(classical_orbit_dim(Partition{4, 2}, gl(6)) / 2 == 13);
  CHECK(classical_orbit_dim(Partition{2, 1}, gl(3)) / 2 == 2);
  CHECK(classical_parabolic_radical_dim(GroupFamily::GL, 6, 3) == 9);
  CHECK(induced_dim_identity(gl_datum));

  for (int p = 1; p <= 6; ++p) {
    for (GroupFamily f : {GroupFamily::GL, GroupFamily::GSp, GroupFamily::GSO}) {
      for (int c : {1, 2}) {
        std::vector<int> raw;
        if (f == GroupFamily::GL) raw = {p + c, p - c};
        if (f == GroupFamily::GSp) raw = {2 * p + 2 * c, 2 * p + 2 - 2 * c};
        if (f == GroupFamily::GSO) raw = {2 * p + 2 * c - 1, 2 * p - 2 * c + 1};
        if (std::min(raw[0], raw[1]) < 0) continue;
        const Partition target(std::move(raw));
        for (const InducingDatum& d : classify_inducing_data(f, target))
          CHECK(induced_dim_identity(d));
      }
    }
  }
}

TEST_CASE("two-block radical dims match the explicit root enumeration") {
  for (int n_cap = 2; n_cap <= 8; ++n_cap) {
    for (int b = 1; b <= n_cap; ++b) {
      CHECK(classical_parabolic_radical_dim(GroupFamily::GSp, 2 * n_cap, b) ==
            testing::c_type_two_block_radical(n_cap, b));
      CHECK(classical_parabolic_radical_dim(GroupFamily::GSO, 2 * n_cap, b) ==
            testing::d_type_two_block_radical(n_cap, b));
    }
  }
}

TEST_CASE("swap bijection on the odd-parity data of the depth-2 target") {
  for (int p = 2; p <= 8; ++p) {
    const Partition target{p + 2, p - 2};
    const auto data = classify_inducing_data(GroupFamily::GL, target);
    std::vector<InducingDatum> odd1, odd3;
    for (const InducingDatum& d : data) {
      if (d.i() == 1) odd1.push_back(d);
      if (d.i() == 3) odd3.push_back(d);
    }
    CHECK(!odd1.empty());
    for (const InducingDatum& d : odd1) {
      const InducingDatum swapped{GroupFamily::GL, target, d.other_block(), d.tau2, d.tau1};
      CHECK(std::find(odd3.begin(), odd3.end(), swapped) != odd3.end());
      CHECK(swapped.a() == p - d.a() + 2);
    }
    CHECK(odd1.size() == odd3.size());
  }
}

TEST_CASE("odd Eisenstein descriptors") {
  CHECK(is_odd({GroupFamily::GL, {3, 3}, {}}));
  CHECK_FALSE(is_odd({GroupFamily::GL, {2, 4}, {}}));
  CHECK(is_odd({GroupFamily::GSp, {1}, {}}));
  CHECK_FALSE(is_odd({GroupFamily::GSO, {2}, {}}));
  CHECK(is_odd({GroupFamily::GE7, {}, {1, 2, 3, 4, 5, 6}}));       // misses alpha_7
  CHECK(is_odd({GroupFamily::GE7, {}, {1, 3, 4, 5, 6, 7}}));       // misses alpha_2
  CHECK_FALSE(is_odd({GroupFamily::GE7, {}, {2, 3, 4, 5, 6, 7}})); // keeps 2, 5, 7
}

namespace {

SolutionRow make_row_m2(GroupFamily eis_family, int k, int p, const Partition& eis_orbit) {
  SolutionRow row;
  row.m = 2;
  const auto cusp_config = instantiate(GroupFamily::GL, k, 2);
  const OrbitLabel cusp_orbit = OrbitLabel::classical(gl(2 * k), Partition{2 * k});
  row.slots.push_back({Role::Cuspidal, cusp_config, cusp_orbit,
                       contribution(cusp_config.base_orbit, cusp_orbit)});
  const auto eis_config = instantiate(eis_family, p, 2);
  const OrbitLabel orbit =
      OrbitLabel::classical(eis_config.base_orbit.family(), eis_orbit);
  row.slots.push_back({Role::Eisenstein, eis_config, orbit,
                       contribution(eis_config.base_orbit, orbit)});
  row.total = row.slots[0].contribution + row.slots[1].contribution;
  return row;
}

}  // namespace

TEST_CASE("row labeling via descriptor options") {
  // (4) with ((p+1)(p-1)) at p = 3
  SolutionRow row = make_row_m2(GroupFamily::GL, 2, 3, Partition{4, 2});
  std::vector<std::vector<EisensteinDescriptor>> options(2);
  options[1] = descriptor_options(row.slots[1]);
  CHECK(!options[1].empty());
  const SolutionRow labeled = label_row(row, options);
  CHECK(labeled.status == Vanishing::NonzeroUnipotent);

  std::vector<std::vector<EisensteinDescriptor>> even_only(2);
  for (const auto& e : options[1])
    if (!is_odd(e)) even_only[1].push_back(e);
  CHECK(!even_only[1].empty());
  CHECK(label_row(row, even_only).status == Vanishing::NotUnipotent);

  // descriptors are validated against the slot
  std::vector<std::vector<EisensteinDescriptor>> bad(2);
  bad[1].push_back({GroupFamily::GL, {4, 1}, {}});  // blocks miss the ambient size
  CHECK_THROWS_AS(label_row(row, bad), std::invalid_argument);

  // m != 2 rows stay unknown
  SolutionRow row3;
  row3.m = 3;
  const auto config = instantiate(GroupFamily::GL, 2, 3);
  const OrbitLabel orbit = OrbitLabel::classical(gl(6), Partition{6});
  row3.slots.push_back({Role::Cuspidal, config, orbit, 6});
  std::vector<std::vector<EisensteinDescriptor>> none(1);
  CHECK(label_row(row3, none).status == Vanishing::Unknown);
}

TEST_CASE("GE7 descriptor options") {
  const auto config = instantiate(GroupFamily::GE7, 0, 2);
  const OrbitLabel orbit = OrbitLabel::exceptional(ExcGroup::E7, "E7(a2)");
  const Slot slot{Role::Eisenstein, config, orbit, 1};
  const auto options = descriptor_options(slot);
  CHECK(options.size() == 7);
  int odd = 0;
  for (const auto& e : options)
    if (is_odd(e)) ++odd;
  CHECK(odd == 3);
}
