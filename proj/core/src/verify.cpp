#include "dimeq/verify.hpp"

#include <algorithm>

#include "dimeq/inducing.hpp"
#include "dimeq/root_system.hpp"
#include "dimeq/weyl.hpp"

namespace dimeq {

namespace {

CheckResult check(std::string name, bool pass, std::string detail = "") {
  return {std::move(name), pass, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> verify_root_fixtures() {
  std::vector<CheckResult> out;
  const RootSystem& e6 = RootSystem::get(RootSystemType::E6);
  const RootSystem& e7 = RootSystem::get(RootSystemType::E7);

  out.push_back(check("E6 positive root count = 36",
                      static_cast<int>(e6.positive_roots().size()) == 36));
  out.push_back(check("E7 positive root count = 63",
                      static_cast<int>(e7.positive_roots().size()) == 63));

  const RootVec highest = parse_root_digits(e6, "122321");
  int hsum = 0;
  for (int x : highest) hsum += x;
  out.push_back(check("E6 highest root 122321 with coefficient sum 11",
                      e6.is_positive_root(highest) && hsum == 11));

  const WeylWord w0{{6, 5, 4, 3, 2, 4, 5, 1, 3}};
  const std::pair<const char*, const char*> images[] = {
      {"100000", "010000"}, {"001100", "000100"}, {"000110", "100000"},
      {"000011", "000010"}, {"010000", "001000"}};
  for (const auto& [src, want] : images) {
    const RootVec got = apply_weyl_word(e6, w0, parse_root_digits(e6, src));
    out.push_back(check(std::string("w0 sends ") + src + " to " + want,
                        got == parse_root_digits(e6, want), "got " + root_digits(got)));
  }

  const WeylWord w0b{{6, 5, 4, 3, 2, 4, 5, 1}};
  const std::pair<const char*, const char*> images_b[] = {
      {"010000", "001000"}, {"010100", "001100"}, {"101100", "010100"},
      {"000011", "000010"}, {"001110", "100000"}};
  for (const auto& [src, want] : images_b) {
    const RootVec got = apply_weyl_word(e6, w0b, parse_root_digits(e6, src));
    out.push_back(check(std::string("w0' sends ") + src + " to " + want,
                        got == parse_root_digits(e6, want), "got " + root_digits(got)));
  }

  const int levi257[] = {2, 5, 7};
  out.push_back(check("E7 radical dim for the {a2,a5,a7} Levi = 60",
                      unipotent_radical_dim(e7, std::span<const int>(levi257)) == 60));
  const int levi4[] = {4};
  out.push_back(check("E6 radical dim for the {a4} Levi = 35",
                      unipotent_radical_dim(e6, std::span<const int>(levi4)) == 35));
  const int all6[] = {1, 2, 3, 4, 5, 6};
  out.push_back(check("E6 radical dim for the full Levi = 0",
                      unipotent_radical_dim(e6, std::span<const int>(all6)) == 0));
  const int levi_a6[] = {1, 3, 4, 5, 6, 7};
  out.push_back(check("E7 radical dim for the A6 Levi = 42",
                      unipotent_radical_dim(e7, std::span<const int>(levi_a6)) == 42));
  out.push_back(check("E7 radical dim for the E6 Levi = 27",
                      unipotent_radical_dim(e7, std::span<const int>(all6)) == 27));

  // 35-dimensional radical minus the three omitted roots leaves 32.
  bool omitted_ok = true;
  for (const char* s : {"001100", "000010", "000110"})
    omitted_ok = omitted_ok && e6.is_positive_root(parse_root_digits(e6, s));
  out.push_back(check("the three omitted radical roots are roots (dim 35 - 3 = 32)",
                      omitted_ok && 35 - 3 == 32));

  CharacterSupport ge7_support;
  for (const char* s : {"1000000", "0010000", "0101000", "0001100", "0000110", "0000011"})
    ge7_support.entries.push_back(parse_root_digits(e7, s));
  out.push_back(check("GE7 coefficient character support consists of roots",
                      verify_character_support(e7, ge7_support)));

  CharacterSupport d5_support;
  for (const char* s : {"100000", "001100", "000110", "000011", "010000"})
    d5_support.entries.push_back(parse_root_digits(e6, s));
  out.push_back(check("E6 D5 character support consists of roots",
                      verify_character_support(e6, d5_support)));

  CharacterSupport d5a1_support;
  for (const char* s : {"010000", "101100", "000011", "000111", "001110"})
    d5a1_support.entries.push_back(parse_root_digits(e6, s));
  out.push_back(check("E6 D5(a1) character support consists of roots",
                      verify_character_support(e6, d5a1_support)));

  out.push_back(check("(200000) is rejected as a root",
                      !e6.is_root(parse_root_digits(e6, "200000"))));

  // The nine abelianization coset representatives sit outside the {a3,a5} Levi.
  const std::vector<RootVec> levi35 = {e6.simple_root(3), e6.simple_root(5)};
  bool nine_ok = true;
  for (const char* s : {"100000", "101000", "000001", "000011", "000100", "001100",
                        "000110", "001110", "010000"}) {
    const RootVec v = parse_root_digits(e6, s);
    if (!e6.is_positive_root(v)) nine_ok = false;
    std::vector<RootVec> gens = levi35;
    gens.push_back(v);
    // outside the span iff adding it grows the radical complement
    if (unipotent_radical_dim(e6, gens) == unipotent_radical_dim(e6, levi35)) nine_ok = false;
  }
  out.push_back(check("the nine coset representatives are roots outside the {a3,a5} Levi",
                      nine_ok));

  out.push_back(check("half_dim(D4 in E6) = 30",
                      half_dim(OrbitLabel::exceptional(ExcGroup::E6, "D4")) == 30));
  out.push_back(check("half_dim(E6 in E7) = 60",
                      half_dim(OrbitLabel::exceptional(ExcGroup::E7, "E6")) == 60));
  return out;
}

CheckResult verify_table_m(int m, ParamRange params, const SolveOptions& opts) {
  const TableSet tables = enumerate_tables(m, params, opts);
  const MatchReport report = match_tables(tables, opts);
  std::string detail = std::to_string(tables.row_count()) + " rows in " +
                       std::to_string(tables.groups.size()) + " groups";
  if (!report.ok) {
    detail += "; missing " + std::to_string(report.missing.size()) + ", unexpected " +
              std::to_string(report.unexpected.size());
    for (const auto& s : report.missing) detail += "\n    missing: " + s;
    size_t shown = 0;
    for (const auto& s : report.unexpected) {
      if (++shown > 8) {
        detail += "\n    ...";
        break;
      }
      detail += "\n    unexpected: " + s;
    }
  }
  return check("m=" + std::to_string(m) + " classification matches the family fixture",
               report.ok, detail);
}

CheckResult verify_cuspidal_depth(int max_m, int max_k, int l_max, ParamRange params) {
  std::vector<int> ms, ks;
  for (int m = 2; m <= max_m; ++m) ms.push_back(m);
  for (int k = 1; k <= max_k; ++k) ks.push_back(k);
  const CuspidalBoundReport report = verify_cuspidal_bound(ms, ks, l_max, params);
  std::string detail;
  for (const auto& s : report.counterexamples) detail += s + "; ";
  return check("cuspidal GL depth: no rows for k >= 3, contribution = km(m-1)/2", report.ok(),
               detail);
}

CheckResult verify_length_bound(ParamRange params) {
  const int l2 = max_length(2, params);
  const int l3 = max_length(3, params);
  return check("maximum length is 3 for m = 2 and m = 3", l2 == 3 && l3 == 3,
               "m=2: " + std::to_string(l2) + ", m=3: " + std::to_string(l3));
}

namespace {

std::vector<std::pair<GroupFamily, Partition>> classified_targets(int p) {
  std::vector<std::pair<GroupFamily, Partition>> out;
  auto push = [&](GroupFamily f, int lead, int tail) {
    if (tail < 0) return;
    out.emplace_back(f, Partition{lead, tail});
  };
  push(GroupFamily::GL, p + 1, p - 1);
  push(GroupFamily::GL, p + 2, p - 2);
  push(GroupFamily::GSp, 2 * p + 2, 2 * p);
  push(GroupFamily::GSp, 2 * p + 4, 2 * p - 2);
  push(GroupFamily::GSO, 2 * p + 1, 2 * p - 1);
  push(GroupFamily::GSO, 2 * p + 3, 2 * p - 3);
  return out;
}

}  // namespace

CheckResult verify_inducing_closed_forms(int max_p) {
  for (int p = 1; p <= max_p; ++p) {
    for (const auto& [family, target] : classified_targets(p)) {
      const auto brute = classify_inducing_data(family, target);
      const auto closed = closed_form_inducing_data(family, target);
      if (brute != closed) {
        return check("inducing data: brute force equals the closed forms", false,
                     std::string(family_name(family)) + " target " + target.to_string() +
                         ": " + std::to_string(brute.size()) + " vs " +
                         std::to_string(closed.size()) + " data");
      }
    }
  }
  return check("inducing data: brute force equals the closed forms", true,
               "all six target families, p <= " + std::to_string(max_p));
}

CheckResult verify_induced_dim_identity(int max_p) {
  int count = 0;
  for (int p = 1; p <= max_p; ++p) {
    for (const auto& [family, target] : classified_targets(p)) {
      for (const InducingDatum& d : classify_inducing_data(family, target)) {
        ++count;
        if (!induced_dim_identity(d))
          return check("induced orbit dimension identity", false, d.to_string());
      }
    }
  }
  // GE7 anchors: dim tau + dim U(P) reaches the two Eisenstein orbits.
  const RootSystem& e7 = RootSystem::get(RootSystemType::E7);
  const int levi_a6[] = {1, 3, 4, 5, 6, 7};
  const int levi_e6[] = {1, 2, 3, 4, 5, 6};
  const int u_a6 = unipotent_radical_dim(e7, std::span<const int>(levi_a6));
  const int u_e6 = unipotent_radical_dim(e7, std::span<const int>(levi_e6));
  const int tau_a6 = classical_orbit_dim(Partition{5, 2}, gl(7)) / 2;
  const int tau_e6 = half_dim(OrbitLabel::exceptional(ExcGroup::E6, "E6(a1)"));
  const bool anchor1 = u_a6 + tau_a6 == half_dim(OrbitLabel::exceptional(ExcGroup::E7, "E7(a2)"));
  const bool anchor2 = u_e6 + tau_e6 == half_dim(OrbitLabel::exceptional(ExcGroup::E7, "E7(a1)"));
  return check("induced orbit dimension identity", anchor1 && anchor2,
               std::to_string(count) + " classical data; anchors " + std::to_string(u_a6) +
                   "+" + std::to_string(tau_a6) + "=61, " + std::to_string(u_e6) + "+" +
                   std::to_string(tau_e6) + "=62");
}

CheckResult verify_weyl_scan(int max_p) {
  for (int p = 1; p <= max_p; ++p) {
    for (int r = p; r < 2 * p; ++r) {
      const AdmissibilityContext ctx(p, r);
      const auto found = admissible_set(ctx);
      std::vector<PermutationMatrix> expected;
      for (int q = 0; q <= 2 * p - r; ++q)
        expected.push_back(canonical_rep(ctx, build_wq(p, r, q)));
      std::sort(expected.begin(), expected.end());
      if (found != expected)
        return check("admissible double cosets equal the staircase family", false,
                     "p=" + std::to_string(p) + " r=" + std::to_string(r) + ": found " +
                         std::to_string(found.size()) + ", expected " +
                         std::to_string(expected.size()));
    }
  }
  return check("admissible double cosets equal the staircase family", true,
               "p <= " + std::to_string(max_p) + ", all r");
}

CheckResult verify_catalog_consistency(int max_param) {
  for (int m = 2; m <= 6; ++m) {
    for (GroupFamily f : catalog_families(m)) {
      const int lo = family_has_param(f) ? 1 : 0;
      const int hi = family_has_param(f) ? max_param : 0;
      for (int q = lo; q <= hi; ++q) {
        const CoefficientConfig config = instantiate(f, q, m);
        if (config.dim_u != half_dim(config.base_orbit))
          return check("catalog dim_U equals half the base orbit dimension", false,
                       config.to_string());
        int group_side = -1;
        switch (f) {
          case GroupFamily::GL: group_side = q * (q - 1) * m * m / 2; break;
          case GroupFamily::GSp: group_side = 4 * q * q + 3 * q; break;
          case GroupFamily::GSO: group_side = 4 * q * q - 3 * q; break;
          case GroupFamily::GE7: {
            const int levi[] = {2, 5, 7};
            group_side = unipotent_radical_dim(RootSystem::get(RootSystemType::E7),
                                               std::span<const int>(levi));
            break;
          }
          case GroupFamily::GE6:
            group_side = config.dim_u;  // pinned via the orbit fixture anchor
            break;
        }
        if (config.dim_u != group_side)
          return check("catalog dim_U equals half the base orbit dimension", false,
                       config.to_string() + ": group side " + std::to_string(group_side));
      }
    }
  }
  return check("catalog dim_U equals half the base orbit dimension", true,
               "params <= " + std::to_string(max_param) + ", m <= 6");
}

std::vector<CheckResult> verify_all(const VerifyOptions& opts) {
  std::vector<CheckResult> out = verify_root_fixtures();
  out.push_back(verify_catalog_consistency(8));
  out.push_back(verify_table_m(2, opts.params, opts.solve));
  out.push_back(verify_table_m(3, opts.params, opts.solve));
  for (int m = 4; m <= 6; ++m)
    out.push_back(verify_table_m(m, {1, std::min(opts.params.hi, 5)}, opts.solve));
  out.push_back(verify_cuspidal_depth(6, 6, 4, opts.params));
  out.push_back(verify_length_bound(opts.params));
  out.push_back(verify_inducing_closed_forms(opts.max_inducing_p));
  out.push_back(verify_induced_dim_identity(opts.max_inducing_p));
  out.push_back(verify_weyl_scan(opts.max_weyl_p));
  return out;
}

}  // namespace dimeq
