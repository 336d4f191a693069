#include <doctest.h>

#include "oracles.hpp"
#include "polymat/constructs.hpp"
#include "polymat/inequality.hpp"

using namespace polymat;

namespace {

// singletons 2, pairs 3 except h({3,4}) = 4, triples 4, full 4
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

TEST_CASE("polymatroid verdicts") {
  RankVector fano = rank_vector(fano_arrangement(Field::make(2, 1)));
  CHECK(is_polymatroid(fano));

  RankVector bad{GroundSet(2)};
  bad.set(0, 1);
  auto v = polymatroid_violation(bad);
  REQUIRE(v.has_value());
  CHECK(v->axiom == Axiom::normalization);

  CHECK(is_polymatroid(ingleton_violator()));
  CHECK(oracle::full_polymatroid(ingleton_violator()));
}

TEST_CASE("elemental check agrees with the full-definition oracle") {
  SplitMix rng(77);
  int disagreements = 0;
  for (int trial = 0; trial < 800; ++trial) {
    RankVector h{GroundSet(4)};
    if (trial % 3 == 0) {
      // representable, then possibly corrupted
      Field f = trial % 2 ? Field::make(3, 1) : Field::make(2, 1);
      h = rank_vector(oracle::random_arrangement(rng, f, 4, 4));
      if (trial % 6 == 0) {
        Mask where = Mask(rng.below(16));
        h.set(where, h.at(where) + Rational(std::int64_t(rng.below(5)) - 2));
      }
    } else {
      for (Mask m = 1; m < 16; ++m) h.set(m, Rational(std::int64_t(rng.below(6))));
    }
    if (is_polymatroid(h) != oracle::full_polymatroid(h)) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("ingleton scores") {
  RankVector h = ingleton_violator();
  CHECK(ingleton_score(h, 0, 0, 0, 0) == 0);
  CHECK(ingleton_score(h, 1, 2, 4, 8) == -1);

  RankVector fano = rank_vector(fano_arrangement(Field::make(2, 1)));
  CHECK(ingleton_score(fano, 1, 2, 4, 1u << 5) >= 0);

  SplitMix rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Mask a1 = Mask(rng.below(16)), a2 = Mask(rng.below(16));
    Mask a3 = Mask(rng.below(16)), a4 = Mask(rng.below(16));
    CHECK(ingleton_score(h, a1, a2, a3, a4) == ingleton_score(h, a2, a1, a3, a4));
    CHECK(ingleton_score(h, a1, a2, a3, a4) == ingleton_score(h, a1, a2, a4, a3));
  }
}

TEST_CASE("exhaustive scan finds the violating quadruple") {
  RankVector h = ingleton_violator();
  ScanOptions opts;
  IngletonReport rep = ingleton_scan(h, opts);
  CHECK(rep.min_score == -1);
  CHECK(rep.argmin == std::array<Mask, 4>{1, 2, 4, 8});
  CHECK(rep.quadruples_checked == 136ull * 136ull);
  CHECK(ingleton_score(h, rep.argmin[0], rep.argmin[1], rep.argmin[2], rep.argmin[3]) ==
        rep.min_score);

  // rational path hits the same minimum, scaled
  RankVector q = scale(h, Rational(1, 3));
  IngletonReport rq = ingleton_scan(q, opts);
  CHECK(rq.min_score == Rational(-1, 3));
  CHECK(rq.argmin == rep.argmin);
}

TEST_CASE("exhaustive scan size guard and sampled reproducibility") {
  RankVector big{GroundSet(8)};
  ScanOptions opts;
  CHECK_THROWS_AS(ingleton_scan(big, opts), size_error);

  RankVector h = ingleton_violator();
  ScanOptions sampled;
  sampled.mode = ScanMode::sampled;
  sampled.trials = 20000;
  sampled.seed = 42;
  IngletonReport r1 = ingleton_scan(h, sampled);
  sampled.threads = 3;
  IngletonReport r2 = ingleton_scan(h, sampled);
  CHECK(r1.min_score == r2.min_score);
  CHECK(r1.argmin == r2.argmin);
  CHECK(r1.quadruples_checked == 20000);
}

TEST_CASE("linear rank expressions") {
  RankVector fano = rank_vector(fano_arrangement(Field::make(2, 1)));
  LinearRankExpr zero;
  CHECK(eval_expr(fano, zero) == 0);

  // J at a fixed quadruple equals ingleton_score
  Mask a1 = 1, a2 = 2, a3 = 4, a4 = 1u << 3;
  LinearRankExpr j;
  for (auto pair : {std::pair<Mask, Mask>{a1, a2}, {a1, a3}, {a1, a4}, {a2, a3}, {a2, a4}})
    j.terms.push_back({Rational(1), {pair.first, pair.second}});
  j.terms.push_back({Rational(-1), {a1}});
  j.terms.push_back({Rational(-1), {a2}});
  j.terms.push_back({Rational(-1), {a3, a4}});
  j.terms.push_back({Rational(-1), {a1, a2, a3}});
  j.terms.push_back({Rational(-1), {a1, a2, a4}});
  CHECK(eval_expr(fano, j) == ingleton_score(fano, a1, a2, a3, a4));

  // submodularity instance: h(A)+h(B) >= h(A∪B)+h(A∩B)
  Mask a = 0b0001001, b = 0b0001010;
  LinearRankExpr sub;
  sub.terms.push_back({Rational(1), {a}});
  sub.terms.push_back({Rational(1), {b}});
  sub.terms.push_back({Rational(-1), {a | b}});
  sub.terms.push_back({Rational(-1), {a & b}});
  CHECK(eval_expr(fano, sub) >= 0);
}

TEST_CASE("rank ratios") {
  RankVector fano = rank_vector(fano_arrangement(Field::make(2, 1)));
  std::vector<Mask> ys = {1, 2, 4};
  std::vector<Mask> ws = {1u << 3, 1u << 4, 1u << 5, 1u << 6};
  CHECK(dfz_ratio(fano, ys, ws) == 1);
  CHECK(dfz_ratio(scale(fano, 2), ys, ws) == 1);

  RankVector x2 = rank_vector(dfz_arrangement(Field::make(3, 1)));
  std::vector<Mask> zs, vs;
  for (int i = 0; i < 5; ++i) zs.push_back(1u << i);
  for (int i = 5; i < 13; ++i) vs.push_back(1u << i);
  CHECK(dfz_ratio(x2, zs, vs) == 1);

  RankVector withzero{GroundSet(2)};
  withzero.set(1, 1);
  CHECK_THROWS_AS(dfz_ratio(withzero, {1}, {2}), input_error);
}
