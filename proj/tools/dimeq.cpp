// Command-line frontend: orbit dimensions, induced orbits, inducing-data
// classification, the dimension-equation classifier with fixture matching,
// nonvanishing labels, the admissibility scan, and the verification pipeline.

#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dimeq/inducing.hpp"
#include "dimeq/root_system.hpp"
#include "dimeq/solver.hpp"
#include "dimeq/verify.hpp"
#include "dimeq/weyl.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using nlohmann::json;
using namespace dimeq;

std::string version_header() {
  return std::string("# dimeq ") + kToolVersion + " (orbit fixture v" +
         std::to_string(ExceptionalTable::instance().version()) + ", table fixture v" +
         std::to_string(table_fixture_version()) + ")";
}

json version_json() {
  return {{"tool", kToolVersion},
          {"orbit_fixture", ExceptionalTable::instance().version()},
          {"table_fixture", table_fixture_version()}};
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

ParamRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::string fixture_entry_display(const TableFixtureEntry& entry) {
  std::string s(family_name(entry.family));
  if (entry.parts.empty()) return s + " " + entry.label;
  s += " (";
  for (size_t i = 0; i < entry.parts.size(); ++i) {
    const auto [c, d] = entry.parts[i];
    if (i) s += ")(";
    if (c == 0) {
      s += std::to_string(d);
    } else {
      if (c != 1) s += std::to_string(c);
      s += 'q';
      if (d > 0) s += '+' + std::to_string(d);
      if (d < 0) s += std::to_string(d);
    }
  }
  return s + ")";
}

int emit_match_result(const TableSet& tables, const MatchReport& report, bool json_out) {
  if (json_out) {
    json doc{{"versions", version_json()},
             {"tables", to_json(tables)},
             {"match", to_json(report)}};
    std::cout << doc.dump(2) << "\n";
  } else {
    if (!report.ok) {
      for (const auto& s : report.missing) std::cout << "missing: " << s << "\n";
      for (const auto& s : report.unexpected) std::cout << "unexpected: " << s << "\n";
    }
    std::cout << (report.ok ? "fixture match: ok" : "fixture match: FAILED") << "\n";
  }
  return report.ok ? 0 : 1;
}

// Markdown layout: one table per length, one column per contribution pattern,
// one row per slot listing the matched closed-form families.
void emit_tables_markdown(const TableSet& tables) {
  std::cout << version_header() << "\n";
  std::cout << "# classification for m = " << tables.m << ", parameters " << tables.params.lo
            << ".." << tables.params.hi << "\n";
  std::vector<const TableFixtureGroup*> groups;
  for (const TableFixtureGroup& g : table_fixtures())
    if (g.m == tables.m) groups.push_back(&g);
  std::vector<int> lengths;
  for (const auto* g : groups)
    if (std::find(lengths.begin(), lengths.end(), g->key.l) == lengths.end())
      lengths.push_back(g->key.l);
  std::sort(lengths.begin(), lengths.end());
  for (int l : lengths) {
    std::cout << "\n## length " << l << "\n\n";
    std::vector<const TableFixtureGroup*> cols;
    for (const auto* g : groups)
      if (g->key.l == l) cols.push_back(g);
    std::cout << "| slot |";
    for (const auto* g : cols) {
      std::cout << " (";
      for (size_t i = 0; i < g->key.pattern.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << g->key.pattern[i];
      }
      std::cout << ") |";
    }
    std::cout << "\n|---|";
    for (size_t i = 0; i < cols.size(); ++i) std::cout << "---|";
    std::cout << "\n";
    for (int slot = 0; slot < l; ++slot) {
      std::cout << "| " << slot + 1 << " |";
      for (const auto* g : cols) {
        std::cout << " ";
        const auto& entries = g->slots[static_cast<size_t>(slot)];
        for (size_t i = 0; i < entries.size(); ++i) {
          if (i) std::cout << "; ";
          std::cout << fixture_entry_display(entries[i]);
        }
        std::cout << " |";
      }
      std::cout << "\n";
    }
    int rows = 0;
    for (const auto* g : cols) {
      auto it = tables.groups.find(g->key);
      if (it != tables.groups.end()) rows += static_cast<int>(it->second.size());
    }
    std::cout << "\nverified rows at these lengths: " << rows << "\n";
  }
}

int run_classify(int m, ParamRange params, const SolveOptions& opts, int l_max,
                 const std::string& emit) {
  SolveOptions local = opts;
  local.l_max = l_max;
  const TableSet tables = enumerate_tables(m, params, local);
  const MatchReport report = match_tables(tables, local);
  if (emit == "json") return emit_match_result(tables, report, true);
  std::cout << version_header() << "\n";
  std::cout << "# solutions for m = " << m << ", parameters " << params.lo << ".." << params.hi
            << "\n";
  for (const auto& [key, rows] : tables.groups) {
    std::cout << "\n## " << key.to_string() << " (" << rows.size() << " rows)\n\n";
    for (const SolutionRow& row : rows) std::cout << "- " << row.to_string() << "\n";
  }
  std::cout << "\n";
  if (!report.ok) {
    for (const auto& s : report.missing) std::cout << "missing: " << s << "\n";
    for (const auto& s : report.unexpected) std::cout << "unexpected: " << s << "\n";
  }
  std::cout << (report.ok ? "fixture match: ok" : "fixture match: FAILED") << "\n";
  return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimension-equation classifier for nilpotent-orbit global integrals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string emit = "text";
  // shared option storage per subcommand
  struct {
    std::string family = "gl";
    std::string parts;
    std::string group;
    std::string label;
  } orbit_opts;
  auto* cmd_orbit = app.add_subcommand("orbit-dim", "orbit dimension and half-dimension");
  cmd_orbit->add_option("--family", orbit_opts.family, "gl|gsp|gso");
  cmd_orbit->add_option("--parts", orbit_opts.parts, "partition, e.g. 4,2");
  cmd_orbit->add_option("--group", orbit_opts.group, "e6|e7 (exceptional orbit)");
  cmd_orbit->add_option("--label", orbit_opts.label, "Bala-Carter label, e.g. E7(a2)");
  cmd_orbit->add_option("--emit", emit, "text|json");

  struct {
    std::string family = "gl";
    std::string tau1, tau2;
  } induce_opts;
  auto* cmd_induce = app.add_subcommand("induce", "induced orbit of a two-block Levi");
  cmd_induce->add_option("--family", induce_opts.family, "gl|gsp|gso")->required();
  cmd_induce->add_option("--tau1", induce_opts.tau1, "orbit on the GL block")->required();
  cmd_induce->add_option("--tau2", induce_opts.tau2, "orbit on the complementary block");
  cmd_induce->add_option("--emit", emit, "text|json");

  struct {
    std::string group = "gl";
    int p = 0;
    std::string target;
    bool closed = false;
    bool compare = false;
  } inducing_opts;
  auto* cmd_inducing =
      app.add_subcommand("inducing", "classify inducing data for a two-row orbit");
  cmd_inducing->add_option("--group", inducing_opts.group, "gl|gsp|gso")->required();
  cmd_inducing->add_option("--p", inducing_opts.p, "target family parameter")->required();
  cmd_inducing->add_option("--target", inducing_opts.target, "target orbit, e.g. 5,3")
      ->required();
  cmd_inducing->add_flag("--closed-form", inducing_opts.closed,
                         "emit the closed-form families instead of the brute force");
  cmd_inducing->add_flag("--check", inducing_opts.compare,
                         "compare brute force against the closed forms");
  cmd_inducing->add_option("--emit", emit, "text|json");

  struct {
    int m = 2;
    std::string params = "1..6";
    int l_max = 0;
    bool open_regime = false;
    bool disable_restriction = false;
  } cls_opts;
  auto* cmd_classify = app.add_subcommand("classify", "solve the dimension equation");
  cmd_classify->add_option("--m", cls_opts.m, "stabilizer rank")->required();
  cmd_classify->add_option("--params", cls_opts.params, "parameter range LO..HI");
  cmd_classify->add_option("--l-max", cls_opts.l_max, "cap on the number of slots");
  cmd_classify->add_flag("--allow-open-regime", cls_opts.open_regime,
                         "enumerate the unbounded m>=4, k=1 slots within the range");
  cmd_classify->add_flag("--disable-lemma1", cls_opts.disable_restriction,
                         "drop the cuspidal GE6 orbit restriction (D5, D5(a1))");
  cmd_classify->add_option("--emit", emit, "text|json");

  auto* cmd_tables = app.add_subcommand("tables", "emit the classification tables");
  cmd_tables->add_option("--m", cls_opts.m, "stabilizer rank")->required();
  cmd_tables->add_option("--params", cls_opts.params, "parameter range LO..HI");
  cmd_tables->add_flag("--allow-open-regime", cls_opts.open_regime,
                       "enumerate the unbounded m>=4, k=1 slots within the range");
  cmd_tables->add_flag("--disable-lemma1", cls_opts.disable_restriction,
                       "drop the cuspidal GE6 orbit restriction (D5, D5(a1))");
  cmd_tables->add_option("--emit", emit, "markdown|json");

  struct {
    std::string chains = "all";
  } label_opts;
  auto* cmd_label = app.add_subcommand("label", "nonvanishing labels for m = 2 rows");
  cmd_label->add_option("--m", cls_opts.m, "stabilizer rank (labels decide m = 2 only)");
  cmd_label->add_option("--params", cls_opts.params, "parameter range LO..HI");
  cmd_label->add_option("--chains", label_opts.chains,
                        "all|even|odd: which Eisenstein descriptors to admit");
  cmd_label->add_option("--emit", emit, "text|json");

  struct {
    int p = 2;
    int r = -1;
    bool list = false;
    bool check = false;
  } weyl_opts;
  auto* cmd_weyl = app.add_subcommand("weyl", "admissible double-coset scan in GL_2p");
  cmd_weyl->add_option("--p", weyl_opts.p, "half the matrix size (p <= 4)")->required();
  cmd_weyl->add_option("--r", weyl_opts.r, "Levi split GL_r x GL_{2p-r}; default: all r");
  cmd_weyl->add_flag("--list", weyl_opts.list, "list admissible representatives");
  cmd_weyl->add_flag("--check", weyl_opts.check, "verify against the staircase family");
  cmd_weyl->add_option("--emit", emit, "text|json");

  auto* cmd_roots = app.add_subcommand("verify-roots", "root-system fixture identities");
  cmd_roots->add_option("--emit", emit, "text|json");

  struct {
    std::string params = "1..6";
    bool open_regime = false;
    bool disable_restriction = false;
  } all_opts;
  auto* cmd_all = app.add_subcommand("verify-all", "run the full verification pipeline");
  cmd_all->add_option("--params", all_opts.params, "parameter range LO..HI");
  cmd_all->add_flag("--allow-open-regime", all_opts.open_regime,
                    "include the unbounded m>=4, k=1 rows (excluded from matching)");
  cmd_all->add_flag("--disable-lemma1", all_opts.disable_restriction,
                    "drop the cuspidal GE6 orbit restriction (D5, D5(a1))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_orbit->parsed()) {
      OrbitLabel orbit = [&] {
        if (!orbit_opts.group.empty())
          return OrbitLabel::exceptional(parse_exc_group(orbit_opts.group), orbit_opts.label);
        Partition p(parse_parts(orbit_opts.parts));
        const GroupFamily f = parse_family(orbit_opts.family);
        const FamilyTag tag = f == GroupFamily::GL    ? FamilyTag::GL
                              : f == GroupFamily::GSp ? FamilyTag::GSp
                                                      : FamilyTag::GSO;
        return OrbitLabel::classical({tag, p.size()}, std::move(p));
      }();
      if (emit == "json") {
        json doc{{"orbit", to_json(orbit)}, {"dim", orbit_dim(orbit)}, {"half", half_dim(orbit)}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "orbit " << orbit.to_string() << ": dim " << orbit_dim(orbit) << ", half "
                  << half_dim(orbit) << "\n";
      }
      return 0;
    }

    if (cmd_induce->parsed()) {
      const GroupFamily f = parse_family(induce_opts.family);
      const Partition tau1(parse_parts(induce_opts.tau1));
      const Partition tau2(parse_parts(induce_opts.tau2));
      const InduceResult result = induce(f, tau1, tau2);
      if (emit == "json") {
        json doc{{"orbit", result.orbit.parts()}, {"valid", result.valid}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "induced orbit " << result.orbit.to_string()
                  << (result.valid ? "" : "  [not a valid orbit partition]") << "\n";
      }
      return 0;
    }

    if (cmd_inducing->parsed()) {
      const GroupFamily f = parse_family(inducing_opts.group);
      const Partition target(parse_parts(inducing_opts.target));
      const int expected_size = f == GroupFamily::GL    ? 2 * inducing_opts.p
                                : f == GroupFamily::GSp ? 4 * inducing_opts.p + 2
                                                        : 4 * inducing_opts.p;
      if (target.size() != expected_size) {
        std::cerr << "target " << target.to_string() << " does not live in the rank-"
                  << inducing_opts.p << " group (size " << expected_size << ")\n";
        return 2;
      }
      if (inducing_opts.compare) {
        const auto brute = classify_inducing_data(f, target);
        const auto closed = closed_form_inducing_data(f, target);
        const bool ok = brute == closed;
        std::cout << (ok ? "brute force equals the closed forms (" +
                               std::to_string(brute.size()) + " data)"
                         : "MISMATCH between brute force and closed forms")
                  << "\n";
        return ok ? 0 : 1;
      }
      const auto data = inducing_opts.closed ? closed_form_inducing_data(f, target)
                                             : classify_inducing_data(f, target);
      if (emit == "json") {
        json arr = json::array();
        for (const InducingDatum& d : data) {
          arr.push_back({{"levi_gl_block", d.gl_block},
                         {"other_block", d.other_block()},
                         {"a", d.a()},
                         {"i", d.i()},
                         {"tau1", d.tau1.parts()},
                         {"tau2", d.tau2.parts()}});
        }
        json doc{{"versions", version_json()},
                 {"group", family_name(f)},
                 {"target", target.parts()},
                 {"data", std::move(arr)}};
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const InducingDatum& d : data)
          std::cout << d.to_string() << "  (a=" << d.a() << ", i=" << d.i() << ")\n";
        std::cout << data.size() << " inducing data\n";
      }
      return 0;
    }

    if (cmd_classify->parsed() || cmd_tables->parsed() || cmd_label->parsed()) {
      SolveOptions opts;
      opts.ge6_cuspidal_restriction = !cls_opts.disable_restriction;
      opts.allow_open_regime = cls_opts.open_regime;
      const ParamRange params = parse_range(cls_opts.params);
      if (cmd_classify->parsed())
        return run_classify(cls_opts.m, params, opts, cls_opts.l_max, emit);
      if (cmd_tables->parsed()) {
        const TableSet tables = enumerate_tables(cls_opts.m, params, opts);
        const MatchReport report = match_tables(tables, opts);
        if (emit == "json") return emit_match_result(tables, report, true);
        emit_tables_markdown(tables);
        if (!report.ok) {
          for (const auto& s : report.missing) std::cout << "missing: " << s << "\n";
          for (const auto& s : report.unexpected) std::cout << "unexpected: " << s << "\n";
        }
        std::cout << "\n" << (report.ok ? "fixture match: ok" : "fixture match: FAILED") << "\n";
        return report.ok ? 0 : 1;
      }
      // label
      TableSet tables = enumerate_tables(cls_opts.m, params, opts);
      json arr = json::array();
      int nonzero = 0, not_unipotent = 0, unknown = 0;
      for (auto& [key, rows] : tables.groups) {
        for (SolutionRow& row : rows) {
          std::vector<std::vector<EisensteinDescriptor>> options;
          for (const Slot& slot : row.slots) {
            std::vector<EisensteinDescriptor> slot_options = descriptor_options(slot);
            if (label_opts.chains == "even") {
              std::erase_if(slot_options,
                            [](const EisensteinDescriptor& e) { return is_odd(e); });
            } else if (label_opts.chains == "odd") {
              std::erase_if(slot_options,
                            [](const EisensteinDescriptor& e) { return !is_odd(e); });
            }
            options.push_back(std::move(slot_options));
          }
          row = label_row(std::move(row), options);
          switch (row.status) {
            case Vanishing::NonzeroUnipotent: ++nonzero; break;
            case Vanishing::NotUnipotent: ++not_unipotent; break;
            case Vanishing::Unknown: ++unknown; break;
          }
          if (emit == "json")
            arr.push_back(to_json(row));
          else
            std::cout << row.to_string() << "  -> " << vanishing_name(row.status) << "\n";
        }
      }
      if (emit == "json") {
        json doc{{"versions", version_json()},
                 {"chains", label_opts.chains},
                 {"rows", std::move(arr)}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "nonzero_unipotent: " << nonzero << ", not_unipotent: " << not_unipotent
                  << ", unknown: " << unknown << "\n";
      }
      return 0;
    }

    if (cmd_weyl->parsed()) {
      std::vector<int> rs;
      if (weyl_opts.r >= 0)
        rs.push_back(weyl_opts.r);
      else
        for (int r = weyl_opts.p; r < 2 * weyl_opts.p; ++r) rs.push_back(r);
      bool all_ok = true;
      json groups = json::array();
      for (int r : rs) {
        const AdmissibilityContext ctx(weyl_opts.p, r);
        const auto found = admissible_set(ctx);
        std::vector<PermutationMatrix> expected;
        for (int q = 0; q <= 2 * weyl_opts.p - r; ++q)
          expected.push_back(canonical_rep(ctx, build_wq(weyl_opts.p, r, q)));
        std::sort(expected.begin(), expected.end());
        const bool ok = found == expected;
        all_ok = all_ok && ok;
        if (emit == "json") {
          json perms = json::array();
          for (const auto& w : found) {
            std::vector<int> one_line;
            for (int c : w.row_to_col) one_line.push_back(c + 1);
            perms.push_back(one_line);
          }
          groups.push_back({{"p", weyl_opts.p},
                            {"r", r},
                            {"admissible", std::move(perms)},
                            {"count", found.size()},
                            {"matches_staircase", ok}});
        } else {
          std::cout << "p=" << weyl_opts.p << " r=" << r << ": " << found.size()
                    << " admissible cosets (expected " << 2 * weyl_opts.p - r + 1 << ") "
                    << (ok ? "ok" : "MISMATCH") << "\n";
          if (weyl_opts.list)
            for (const auto& w : found) std::cout << "  " << w.one_line() << "\n";
        }
      }
      if (emit == "json") std::cout << json{{"groups", std::move(groups)}}.dump(2) << "\n";
      return all_ok ? 0 : 1;
    }

    if (cmd_roots->parsed()) {
      const auto results = verify_root_fixtures();
      bool all_ok = true;
      if (emit == "json") {
        json arr = json::array();
        for (const CheckResult& r : results) {
          arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
          all_ok = all_ok && r.pass;
        }
        std::cout << json{{"checks", std::move(arr)}}.dump(2) << "\n";
      } else {
        for (const CheckResult& r : results) {
          std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name;
          if (!r.pass && !r.detail.empty()) std::cout << "  (" << r.detail << ")";
          std::cout << "\n";
          all_ok = all_ok && r.pass;
        }
      }
      return all_ok ? 0 : 1;
    }

    if (cmd_all->parsed()) {
      VerifyOptions vopts;
      vopts.params = parse_range(all_opts.params);
      vopts.solve.ge6_cuspidal_restriction = !all_opts.disable_restriction;
      vopts.solve.allow_open_regime = all_opts.open_regime;
      const auto results = verify_all(vopts);
      int failures = 0;
      for (const CheckResult& r : results) {
        std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        if (!r.pass) ++failures;
      }
      std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
