#include <doctest.h>

#include "oracles.hpp"
#include "polymat/cone.hpp"
#include "polymat/inequality.hpp"

using namespace polymat;

namespace {

RankVector ingleton_violator() {
  RankVector h{GroundSet(4)};
  for (Mask m = 1; m < 16; ++m) {
    switch (popcount(m)) {
      case 1: h.set(m, 2); break;
      case 2: h.set(m, m == 0b1100 ? 4 : 3); break;
      default: h.set(m, 4); break;
    }
  }
  return h;
}

}  // namespace

TEST_CASE("subspace enumeration matches the Gaussian binomial counts") {
  for (auto [p, d] : {std::pair<std::uint32_t, std::uint32_t>{2, 2}, {2, 3}, {2, 4}, {3, 2},
                      {3, 3}, {3, 4}}) {
    Field f = Field::make(p, 1);
    std::vector<Subspace> all = all_subspaces(f, d);
    std::uint64_t expect = 0;
    for (std::uint32_t r = 0; r <= d; ++r) expect += oracle::gaussian_binomial(d, r, p);
    CHECK(all.size() == expect);
    // canonical and distinct
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
  }
  CHECK(all_subspaces(Field::make(2, 1), 4).size() == 67);
  CHECK(all_subspaces(Field::make(3, 1), 4).size() == 212);
  CHECK(all_subspaces(Field::make(3, 1), 3).size() == 28);
}

TEST_CASE("generator enumeration basics") {
  Field f2 = Field::make(2, 1);

  GeneratorSet tiny = enumerate_generators(1, f2, 1);
  CHECK(tiny.generators.size() == 2);  // ranks (0) and (1)
  CHECK(tiny.tuples_scanned == 2);

  GeneratorSet pairs = enumerate_generators(2, f2, 2);
  bool has_equal_lines = false;
  for (const RankVector& g : pairs.generators)
    if (g.at(1) == 1 && g.at(2) == 1 && g.at(3) == 1) has_equal_lines = true;
  CHECK(has_equal_lines);

  GeneratorSet triples = enumerate_generators(3, f2, 3);
  bool has_u23 = false;
  for (const RankVector& g : triples.generators) {
    bool ok = g.at(1) == 1 && g.at(2) == 1 && g.at(4) == 1 && g.at(3) == 2 && g.at(5) == 2 &&
              g.at(6) == 2 && g.at(7) == 2;
    if (ok) has_u23 = true;
  }
  CHECK(has_u23);

  CHECK(triples.tuples_scanned == 16ull * 16 * 16);
  for (const RankVector& g : triples.generators) CHECK(is_polymatroid(g));
  // dedup is exact
  for (std::size_t i = 0; i < pairs.generators.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.generators.size(); ++j)
      CHECK(pairs.generators[i].values() != pairs.generators[j].values());
}

TEST_CASE("members come back with verified coefficients") {
  GeneratorSet gens = enumerate_generators(2, Field::make(2, 1), 2);
  const RankVector& f1 = gens.generators[1];
  MembershipCertificate one = cone_member(f1, gens);
  CHECK(one.member);
  REQUIRE(one.coefficients.size() == 1);
  CHECK(one.coefficients[0].second == 1);

  // 2*f1 + 3*f2
  const RankVector& f2 = gens.generators[gens.generators.size() - 1];
  RankVector combo{f1.ground()};
  for (std::size_t m = 0; m < combo.values().size(); ++m)
    combo.values()[m] = 2 * f1.values()[m] + 3 * f2.values()[m];
  MembershipCertificate mix = cone_member(combo, gens);
  CHECK(mix.member);
  Rational acc = 0;
  for (const auto& [j, c] : mix.coefficients) acc += c * gens.generators[j].at(3);
  CHECK(acc == combo.at(3));
}

TEST_CASE("the Ingleton violator is separated from small generator cones") {
  RankVector h = ingleton_violator();
  GeneratorSet gens = enumerate_generators(4, Field::make(2, 1), 3);
  merge_generators(gens, enumerate_generators(4, Field::make(3, 1), 2));

  MembershipCertificate cert = cone_member(h, gens);
  CHECK_FALSE(cert.member);
  REQUIRE(cert.separating.size() == 16);
  Rational dot_h = 0;
  for (std::size_t i = 0; i < 16; ++i) dot_h += cert.separating[i] * h.values()[i];
  CHECK(dot_h < 0);
  for (const RankVector& g : gens.generators) {
    Rational dot = 0;
    for (std::size_t i = 0; i < 16; ++i) dot += cert.separating[i] * g.values()[i];
    CHECK(dot >= 0);
  }

  // scaling does not change the verdict
  CHECK_FALSE(cone_member(scale(h, Rational(7, 2)), gens).member);
  CHECK(cone_member(scale(gens.generators[3], Rational(5, 3)), gens).member);
}

TEST_CASE("generator sets round-trip through a directory") {
  GeneratorSet gens = enumerate_generators(2, Field::make(2, 1), 2);
  std::string dir = "cone_gens_tmp";
  save_generators(dir, gens);
  GeneratorSet back = load_generators(dir);
  REQUIRE(back.generators.size() == gens.generators.size());
  for (std::size_t i = 0; i < gens.generators.size(); ++i)
    CHECK(back.generators[i].values() == gens.generators[i].values());
}
