#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dimeq/orbit.hpp"
#include "dimeq/solver.hpp"

using namespace dimeq;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("the shipped orbit fixture matches the embedded copy") {
  const std::string text = slurp(std::string(DIMEQ_SOURCE_DIR) +
                                 "/core/data/orbits_exceptional.json");
  const ExceptionalTable from_file = ExceptionalTable::parse(text);
  const ExceptionalTable& embedded = ExceptionalTable::instance();
  CHECK(from_file.version() == embedded.version());
  for (ExcGroup g : {ExcGroup::E6, ExcGroup::E7}) {
    REQUIRE(from_file.all(g).size() == embedded.all(g).size());
    for (const ExceptionalOrbit& o : embedded.all(g)) {
      const ExceptionalOrbit& f = from_file.at(g, o.label);
      CHECK(f.dim == o.dim);
      CHECK(f.anchored == o.anchored);
      CHECK(f.greater_than == o.greater_than);
    }
  }
}

TEST_CASE("the shipped table fixture parses and matches the embedded groups") {
  const auto doc = nlohmann::json::parse(
      slurp(std::string(DIMEQ_SOURCE_DIR) + "/core/data/tables_expected.json"));
  CHECK(doc.at("version").get<int>() == table_fixture_version());
  // the file lists the desk-checked range; m > 6 groups are synthesized
  size_t file_range_groups = 0;
  for (const TableFixtureGroup& g : table_fixtures())
    if (g.m <= 6) ++file_range_groups;
  CHECK(doc.at("tables").size() == file_range_groups);
  // spot-check cell counts used by the acceptance suite: 4 families per slot
  // in the three m = 2 groups
  int m2_groups = 0;
  for (const auto& g : doc.at("tables")) {
    if (g.at("m").get<int>() != 2) continue;
    ++m2_groups;
    for (const auto& slot : g.at("slots")) CHECK(slot.size() == 4);
  }
  CHECK(m2_groups == 3);
}

TEST_CASE("fixture entries instantiate consistently") {
  for (const TableFixtureGroup& group : table_fixtures()) {
    for (size_t si = 0; si < group.slots.size(); ++si) {
      for (const TableFixtureEntry& entry : group.slots[si]) {
        bool hit = false;
        for (int q = family_has_param(entry.family) ? 1 : 0;
             q <= (family_has_param(entry.family) ? 8 : 0); ++q) {
          const auto orbit = instantiate_entry(entry, q, group.m);
          if (!orbit) continue;
          const auto config = instantiate(entry.family, q, group.m);
          if (half_dim(*orbit) - config.dim_u == group.key.pattern[si]) hit = true;
        }
        // every fixture entry realizes its slot's contribution somewhere
        CHECK(hit);
      }
    }
  }
}
