#pragma once

#include <string>
#include <vector>

#include "dimeq/solver.hpp"

namespace dimeq {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Root-system bookkeeping: positive-root counts, the pinned Weyl-word images,
/// unipotent-radical dimensions, and character supports.
std::vector<CheckResult> verify_root_fixtures();

/// Enumerate and match one stabilizer rank against the closed-form family
/// fixture.
CheckResult verify_table_m(int m, ParamRange params, const SolveOptions& opts = {});

/// solve() is empty for cuspidal GL depth k >= 3, and the cuspidal GL
/// contribution equals k*m*(m-1)/2.
CheckResult verify_cuspidal_depth(int max_m, int max_k, int l_max, ParamRange params);

/// max_length is 3 for m = 2 and m = 3.
CheckResult verify_length_bound(ParamRange params);

/// Brute-force inducing data equal the closed-form families for all six
/// classified targets, p <= max_p.
CheckResult verify_inducing_closed_forms(int max_p);

/// dim(induced)/2 = dim(tau1)/2 + dim(tau2)/2 + dim U(P) on every generated
/// datum (all three classical families), p <= max_p, plus the two GE7 anchor
/// Levis (A6: 42 + 19 = 61; E6 Levi: 27 + 35 = 62).
CheckResult verify_induced_dim_identity(int max_p);

/// Exhaustive admissibility scan equals the staircase representatives
/// {w_q : 0 <= q <= 2p-r} for every p <= max_p and p <= r < 2p.
CheckResult verify_weyl_scan(int max_p);

/// dim_U of every instantiated configuration agrees with the group-side count
/// (GL: k(k-1)m^2/2; GSp: 4n^2+3n; GSO: 4n^2-3n; GE6/GE7 via the root
/// systems), params <= max_param.
CheckResult verify_catalog_consistency(int max_param);

struct VerifyOptions {
  ParamRange params{1, 6};
  SolveOptions solve;
  int max_weyl_p = 4;
  int max_inducing_p = 8;
};

/// The full pipeline run by the verify-all command.
std::vector<CheckResult> verify_all(const VerifyOptions& opts = {});

}  // namespace dimeq
