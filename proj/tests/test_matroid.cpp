#include <doctest.h>

#include <fstream>

#include "oracles.hpp"
#include "polymat/constructs.hpp"
#include "polymat/matroid.hpp"

using namespace polymat;

#ifndef POLYMAT_TEST_DATA
#define POLYMAT_TEST_DATA "tests/data"
#endif

namespace {

RankVector free_matroid(std::uint32_t n) {
  RankVector h{GroundSet(n)};
  for (std::size_t m = 0; m < h.values().size(); ++m) h.values()[m] = popcount(Mask(m));
  return h;
}

}  // namespace

TEST_CASE("matroid recognition") {
  RankVector fano = rank_vector(fano_arrangement(Field::make(2, 1)));
  CHECK(is_matroid(fano));
  CHECK_FALSE(is_matroid(scale(fano, Rational(1, 2))));

  RankVector big{GroundSet(4)};
  for (Mask m = 1; m < 16; ++m)
    big.set(m, popcount(m) == 1 ? 2 : (popcount(m) == 2 ? (m == 0b1100 ? 4 : 3) : 4));
  CHECK_FALSE(is_matroid(big));  // cardinality bound

  RankVector junk{GroundSet(2)};
  junk.set(0, 1);
  CHECK_THROWS_AS(is_matroid(junk), input_error);
}

TEST_CASE("circuits of the Fano matroid") {
  RankVector fano = rank_vector(fano_arrangement(Field::make(2, 1)));
  std::vector<Mask> cs = circuits(fano);
  CHECK(cs == oracle::brute_circuits(fano));

  std::vector<Mask> golden;
  std::ifstream in(std::string(POLYMAT_TEST_DATA) + "/fano_circuits.txt");
  REQUIRE(in.good());
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) golden.push_back(Mask(std::stoul(line, nullptr, 16)));
  CHECK(cs == golden);

  CHECK(cs.size() == 14);
  for (std::size_t i = 0; i < 7; ++i) CHECK(popcount(cs[i]) == 3);
  for (std::size_t i = 7; i < 14; ++i) CHECK(popcount(cs[i]) == 4);
  // {Y1, Y2, W1}
  CHECK(std::find(cs.begin(), cs.end(), Mask(0b1011)) != cs.end());

  CHECK(circuits(free_matroid(4)).empty());
}

TEST_CASE("connectivity") {
  RankVector fano = rank_vector(fano_arrangement(Field::make(2, 1)));
  RankVector x2 = rank_vector(dfz_arrangement(Field::make(3, 1)));
  CHECK(is_connected(fano));
  CHECK(is_connected(x2));
  CHECK_FALSE(is_connected(direct_sum(fano, x2)));
  CHECK_FALSE(is_connected(free_matroid(3)));
}

TEST_CASE("circuit and separator verdicts agree") {
  SplitMix rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Field f = trial % 2 ? Field::make(3, 1) : Field::make(2, 1);
    std::uint32_t n = 2 + std::uint32_t(rng.below(7));
    // matroids need singleton ranks <= 1: use lines and the zero space only
    Arrangement arr;
    arr.field = f;
    arr.ambient = 3;
    for (std::uint32_t i = 0; i < n; ++i)
      arr.subspaces.push_back(oracle::random_subspace(rng, f, 3, std::uint32_t(rng.below(2))));
    RankVector h = rank_vector(arr);
    REQUIRE(is_matroid(h));
    CHECK(is_connected(h) == oracle::separator_connected(h));
  }
  RankVector fano = rank_vector(fano_arrangement(Field::make(2, 1)));
  CHECK(is_connected(fano) == oracle::separator_connected(fano));
}

TEST_CASE("equality set streaming") {
  RankVector fano = rank_vector(fano_arrangement(Field::make(2, 1)));
  CHECK_FALSE(equality_set_check(fano, fano).has_value());
  CHECK_FALSE(equality_set_check(fano, scale(fano, 3)).has_value());

  auto v = equality_set_check(fano, free_matroid(7));
  REQUIRE(v.has_value());
  CHECK(v->kind == EqualityViolation::Kind::cond_entropy_zero);
  CHECK(v->a == Mask(0b0001000));  // {W1}
  CHECK(v->b == Mask(0b0000011));  // {Y1, Y2}
  CHECK(v->describe(fano.ground()) == "H({W1}|{Y1,Y2})=0");

  CHECK_THROWS_AS(equality_set_check(fano, free_matroid(6)), input_error);
}

TEST_CASE("equality verdict is scale invariant") {
  RankVector fano = rank_vector(fano_arrangement(Field::make(2, 1)));
  RankVector other = rank_vector(fano_arrangement(Field::make(3, 1)));
  bool base = equality_set_check(fano, other).has_value();
  for (Rational c : {Rational(2), Rational(7, 3)})
    CHECK(equality_set_check(fano, scale(other, c)).has_value() == base);
}

TEST_CASE("proportionality on connected matroids") {
  RankVector fano = rank_vector(fano_arrangement(Field::make(2, 1)));
  RankVector x2 = rank_vector(dfz_arrangement(Field::make(3, 1)));
  for (const RankVector& m : {fano, x2}) {
    CHECK(proportionality(m, scale(m, Rational(5, 2))) == Rational(5, 2));
    CHECK(proportionality(m, m) == 1);
    CHECK(proportionality(m, scale(m, 0)) == 0);
    CHECK(proportionality(m, scale(m, Rational(7, 3))) == Rational(7, 3));
  }

  RankVector sum = direct_sum(fano, x2);
  CHECK_THROWS_AS(proportionality(sum, sum), input_error);  // not connected
}
