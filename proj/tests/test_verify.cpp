#include <doctest.h>

#include "dimeq/solver.hpp"
#include "dimeq/verify.hpp"
#include "dimeq/weyl.hpp"

using namespace dimeq;

TEST_CASE("root fixture checks all pass") {
  for (const CheckResult& r : verify_root_fixtures()) {
    INFO(r.name, " ", r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("table checks pass under the default options and fail without the restriction") {
  CHECK(verify_table_m(2, {1, 3}).pass);
  CHECK(verify_table_m(3, {1, 3}).pass);
  SolveOptions wide;
  wide.ge6_cuspidal_restriction = false;
  const CheckResult r = verify_table_m(3, {1, 3}, wide);
  CHECK_FALSE(r.pass);
  CHECK(r.detail.find("unexpected") != std::string::npos);
}

TEST_CASE("full pipeline summary") {
  VerifyOptions opts;
  opts.params = {1, 3};
  opts.max_weyl_p = 3;
  opts.max_inducing_p = 4;
  int passed = 0, total = 0;
  for (const CheckResult& r : verify_all(opts)) {
    ++total;
    if (r.pass) ++passed;
  }
  CHECK(passed == total);
  CHECK(total >= 30);
}

TEST_CASE("row JSON carries the full slot data") {
  const SlotSpec specs[] = {{Role::Cuspidal, GroupFamily::GL, 2},
                            {Role::Eisenstein, GroupFamily::GSp, 2}};
  const auto rows = solve(2, specs);
  REQUIRE(rows.size() == 1);
  const auto j = to_json(rows[0]);
  CHECK(j.at("m") == 2);
  CHECK(j.at("l") == 2);
  CHECK(j.at("pattern") == nlohmann::json({2, 1}));
  CHECK(j.at("total") == 3);
  CHECK(j.at("status") == "unknown");
  CHECK(j.at("open_regime") == false);
  CHECK(j.at("slots").size() == 2);
  CHECK(j.at("slots").at(0).at("role") == "cuspidal");
  CHECK(j.at("slots").at(1).at("family") == "GSp");
  CHECK(j.at("slots").at(1).at("orbit").at("parts") == nlohmann::json({6, 4}));
}

TEST_CASE("permutation helpers") {
  const PermutationMatrix w{{1, 3, 0, 2}};
  CHECK(w.one_line() == "[2,4,1,3]");
  CHECK(w.col_to_row() == std::vector<int>{2, 0, 3, 1});
  validate_permutation(w, 4);
  CHECK_THROWS_AS(validate_permutation(w, 5), std::invalid_argument);
}
