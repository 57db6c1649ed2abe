#include <doctest.h>

#include <stdexcept>

#include "dimeq/root_system.hpp"

using namespace dimeq;

TEST_CASE("positive root counts") {
  CHECK(RootSystem::get(RootSystemType::E6).positive_roots().size() == 36);
  CHECK(RootSystem::get(RootSystemType::E7).positive_roots().size() == 63);
}

TEST_CASE("simple reflections permute the roots and are involutions") {
  for (RootSystemType t : {RootSystemType::E6, RootSystemType::E7}) {
    const RootSystem& rs = RootSystem::get(t);
    for (int i = 1; i <= rs.rank(); ++i) {
      int negated = 0;
      for (const RootVec& beta : rs.positive_roots()) {
        const RootVec img = rs.simple_reflection(i, beta);
        CHECK(rs.is_root(img));
        CHECK(rs.simple_reflection(i, img) == beta);
        if (!rs.is_positive_root(img)) ++negated;
      }
      // exactly the simple root itself changes sign
      CHECK(negated == 1);
    }
  }
}

TEST_CASE("pinned Weyl word images") {
  const RootSystem& e6 = RootSystem::get(RootSystemType::E6);
  const WeylWord w0{{6, 5, 4, 3, 2, 4, 5, 1, 3}};
  auto img = [&](const char* s) { return apply_weyl_word(e6, w0, parse_root_digits(e6, s)); };
  CHECK(img("100000") == e6.simple_root(2));
  CHECK(img("001100") == e6.simple_root(4));
  CHECK(img("000110") == e6.simple_root(1));
  CHECK(img("000011") == e6.simple_root(5));
  CHECK(img("010000") == e6.simple_root(3));

  CHECK(apply_weyl_word(e6, WeylWord{}, e6.simple_root(1)) == e6.simple_root(1));
  CHECK_THROWS_AS(apply_weyl_word(e6, w0, parse_root_digits(e6, "200000")),
                  std::invalid_argument);
}

TEST_CASE("words map roots to roots") {
  const RootSystem& e6 = RootSystem::get(RootSystemType::E6);
  const WeylWord w{{6, 5, 4, 3, 2, 4, 5, 1}};
  for (const RootVec& beta : e6.positive_roots()) CHECK(e6.is_root(apply_weyl_word(e6, w, beta)));
}

TEST_CASE("unipotent radical dimensions") {
  const RootSystem& e6 = RootSystem::get(RootSystemType::E6);
  const RootSystem& e7 = RootSystem::get(RootSystemType::E7);
  const int levi257[] = {2, 5, 7};
  CHECK(unipotent_radical_dim(e7, std::span<const int>(levi257)) == 60);
  const int levi4[] = {4};
  CHECK(unipotent_radical_dim(e6, std::span<const int>(levi4)) == 35);
  const int all6[] = {1, 2, 3, 4, 5, 6};
  CHECK(unipotent_radical_dim(e6, std::span<const int>(all6)) == 0);
  CHECK(unipotent_radical_dim(e7, std::span<const int>(all6)) == 27);
  const int a6[] = {1, 3, 4, 5, 6, 7};
  CHECK(unipotent_radical_dim(e7, std::span<const int>(a6)) == 42);
  // non-simple generators: the highest root alone spans a rank-1 Levi
  const std::vector<RootVec> high = {parse_root_digits(e6, "122321")};
  CHECK(unipotent_radical_dim(e6, high) == 35);
}

TEST_CASE("character supports") {
  const RootSystem& e6 = RootSystem::get(RootSystemType::E6);
  const RootSystem& e7 = RootSystem::get(RootSystemType::E7);
  CharacterSupport ge7;
  for (const char* s : {"1000000", "0010000", "0101000", "0001100", "0000110", "0000011"})
    ge7.entries.push_back(parse_root_digits(e7, s));
  CHECK(verify_character_support(e7, ge7));
  CharacterSupport d5;
  for (const char* s : {"100000", "001100", "000110", "000011", "010000"})
    d5.entries.push_back(parse_root_digits(e6, s));
  CHECK(verify_character_support(e6, d5));
  CharacterSupport bad;
  bad.entries.push_back(parse_root_digits(e6, "200000"));
  CHECK_FALSE(verify_character_support(e6, bad));
}

TEST_CASE("digit parsing round-trips and validates") {
  const RootSystem& e7 = RootSystem::get(RootSystemType::E7);
  CHECK(root_digits(parse_root_digits(e7, "0101000")) == "0101000");
  CHECK_THROWS_AS(parse_root_digits(e7, "010100"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_digits(e7, "010100x"), std::invalid_argument);
}
