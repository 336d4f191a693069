#include "polymat/constructs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polymat {

namespace {

Subspace line(const Field& f, std::uint32_t ambient, std::initializer_list<std::uint32_t> ones) {
  MatrixGF gen(f, 1, ambient);
  for (std::uint32_t i : ones) gen.set(0, i, f.one());
  return Subspace::span(gen);
}

}  // namespace

Arrangement fano_arrangement(const Field& f) {
  Arrangement arr;
  arr.field = f;
  arr.ambient = 3;
  arr.subspaces = {
      line(f, 3, {0}), line(f, 3, {1}), line(f, 3, {2}),       // Y1 Y2 Y3
      line(f, 3, {0, 1}), line(f, 3, {1, 2}),                  // W1 W2
      line(f, 3, {0, 1, 2}), line(f, 3, {0, 2}),               // W3 W4
  };
  arr.labels = {"Y1", "Y2", "Y3", "W1", "W2", "W3", "W4"};
  return arr;
}

Arrangement dfz_arrangement(const Field& f) {
  Arrangement arr;
  arr.field = f;
  arr.ambient = 5;
  arr.subspaces = {
      line(f, 5, {0}), line(f, 5, {1}), line(f, 5, {2}), line(f, 5, {3}), line(f, 5, {4}),
      line(f, 5, {0, 1, 2}),  // V1
      line(f, 5, {2, 3, 4}),  // V2
      line(f, 5, {0, 1}),     // V3
      line(f, 5, {0, 2}),     // V4
      line(f, 5, {1, 2}),     // V5
      line(f, 5, {2, 3}),     // V6
      line(f, 5, {2, 4}),     // V7
      line(f, 5, {3, 4}),     // V8
  };
  arr.labels = {"Z1", "Z2", "Z3", "Z4", "Z5", "V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8"};
  return arr;
}

RankVector epsilon_perturb(const RankVector& h, const Rational& eps) {
  const Rational& top = h.at(h.full_mask());
  if (eps < 0 || eps > top)
    throw input_error("epsilon must lie in [0, h(full)] = [0, " + rat_str_short(top) + "]");
  const Rational cap = top - eps;
  RankVector g(h.ground());
  for (std::size_t mask = 0; mask < h.values().size(); ++mask)
    g.values()[mask] = std::min(h.values()[mask], cap);
  return g;
}

RankVector direct_sum(const RankVector& h1, const RankVector& h2) {
  const std::uint32_t n1 = h1.n(), n2 = h2.n();
  if (n1 + n2 > 24) throw size_error("direct sum would exceed 24 elements");
  std::vector<std::string> labels;
  if (!h1.ground().labels.empty() && !h2.ground().labels.empty()) {
    labels = h1.ground().labels;
    labels.insert(labels.end(), h2.ground().labels.begin(), h2.ground().labels.end());
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (uniq.size() != labels.size()) labels.clear();
  }
  RankVector r(GroundSet(n1 + n2, std::move(labels)));
  const Mask low = h1.full_mask();
  for (std::size_t mask = 0; mask < r.values().size(); ++mask)
    r.values()[mask] = h1.at(Mask(mask) & low) + h2.at(Mask(mask) >> n1);
  return r;
}

RankVector phi_base(const Field& fano_field, const Field& dfz_field) {
  return direct_sum(rank_vector(fano_arrangement(fano_field)),
                    rank_vector(dfz_arrangement(dfz_field)));
}

RankVector phi_perturbed(const Rational& eps, const Field& fano_field, const Field& dfz_field) {
  RankVector h1 = rank_vector(fano_arrangement(fano_field));
  RankVector h2 = rank_vector(dfz_arrangement(dfz_field));
  Rational bound = std::min(h1.at(h1.full_mask()), h2.at(h2.full_mask()));
  if (eps <= 0 || eps > bound)
    throw input_error("epsilon must lie in (0, " + rat_str_short(bound) + "]");
  RankVector g = epsilon_perturb(direct_sum(h1, h2), eps);

  // Restrictions to the two blocks must reproduce the block rank vectors.
  std::vector<Mask> block1, block2;
  for (std::uint32_t i = 0; i < h1.n(); ++i) block1.push_back(Mask(1) << i);
  for (std::uint32_t i = 0; i < h2.n(); ++i) block2.push_back(Mask(1) << (h1.n() + i));
  if (!(induce(g, block1).values() == h1.values()))
    throw verification_error("perturbed direct sum does not restrict to the first block");
  if (!(induce(g, block2).values() == h2.values()))
    throw verification_error("perturbed direct sum does not restrict to the second block");
  return g;
}

namespace {

LinearRankExpr cond_zero(Mask a, Mask b) {
  LinearRankExpr e;
  e.terms.push_back({Rational(1), {a | b}});
  e.terms.push_back({Rational(-1), {b}});
  return e;
}

Mask bits(std::initializer_list<int> is) {
  Mask m = 0;
  for (int i : is) m |= Mask(1) << i;
  return m;
}

}  // namespace

std::vector<RankEquality> fano_equalities() {
  std::vector<RankEquality> eqs;
  {
    LinearRankExpr e;
    e.terms.push_back({Rational(1), {bits({0, 1, 2})}});
    for (int i : {0, 1, 2}) e.terms.push_back({Rational(-1), {bits({i})}});
    eqs.push_back({"H(Y1Y2Y3)=H(Y1)+H(Y2)+H(Y3)", e});
  }
  eqs.push_back({"H(W1|Y1Y2)=0", cond_zero(bits({3}), bits({0, 1}))});
  eqs.push_back({"H(W2|Y2Y3)=0", cond_zero(bits({4}), bits({1, 2}))});
  eqs.push_back({"H(W3|Y1W2)=0", cond_zero(bits({5}), bits({0, 4}))});
  eqs.push_back({"H(W4|W1W2)=0", cond_zero(bits({6}), bits({3, 4}))});
  eqs.push_back({"H(Y1|Y3W4)=0", cond_zero(bits({0}), bits({2, 6}))});
  eqs.push_back({"H(Y2|W3W4)=0", cond_zero(bits({1}), bits({5, 6}))});
  eqs.push_back({"H(Y3|W1W3)=0", cond_zero(bits({2}), bits({3, 5}))});
  return eqs;
}

std::vector<RankEquality> dfz_equalities() {
  std::vector<RankEquality> eqs;
  {
    LinearRankExpr e;
    e.terms.push_back({Rational(1), {bits({0, 1, 2, 3, 4})}});
    for (int i : {0, 1, 2, 3, 4}) e.terms.push_back({Rational(-1), {bits({i})}});
    eqs.push_back({"H(Z1..Z5)=sum H(Zi)", e});
  }
  // Zi are bits 0..4, Vj are bits 4+j.
  eqs.push_back({"H(V1|Z1Z2Z3)=0", cond_zero(bits({5}), bits({0, 1, 2}))});
  eqs.push_back({"H(V2|Z3Z4Z5)=0", cond_zero(bits({6}), bits({2, 3, 4}))});
  eqs.push_back({"H(V3|Z1Z2)=0", cond_zero(bits({7}), bits({0, 1}))});
  eqs.push_back({"H(V4|Z1Z3)=0", cond_zero(bits({8}), bits({0, 2}))});
  eqs.push_back({"H(V5|Z2Z3)=0", cond_zero(bits({9}), bits({1, 2}))});
  eqs.push_back({"H(V6|Z3Z4)=0", cond_zero(bits({10}), bits({2, 3}))});
  eqs.push_back({"H(V7|Z3Z5)=0", cond_zero(bits({11}), bits({2, 4}))});
  eqs.push_back({"H(V8|Z4Z5)=0", cond_zero(bits({12}), bits({3, 4}))});
  eqs.push_back({"H(Z1|V1V5)=0", cond_zero(bits({0}), bits({5, 9}))});
  eqs.push_back({"H(Z2|V1V4)=0", cond_zero(bits({1}), bits({5, 8}))});
  eqs.push_back({"H(Z3|V1V3)=0", cond_zero(bits({2}), bits({5, 7}))});
  eqs.push_back({"H(Z3|V3..V8)=0", cond_zero(bits({2}), bits({7, 8, 9, 10, 11, 12}))});
  eqs.push_back({"H(Z3|V2V8)=0", cond_zero(bits({2}), bits({6, 12}))});
  eqs.push_back({"H(Z4|V2V7)=0", cond_zero(bits({3}), bits({6, 11}))});
  eqs.push_back({"H(Z5|V2V6)=0", cond_zero(bits({4}), bits({6, 10}))});
  return eqs;
}

namespace {

using Perm = std::array<int, 4>;
// The two swap symmetries of J: first pair, second pair, both.
constexpr std::array<Perm, 4> kSymmetries = {Perm{0, 1, 2, 3}, Perm{1, 0, 2, 3},
                                             Perm{0, 1, 3, 2}, Perm{1, 0, 3, 2}};

// The five index pairs whose rank appears positively in J.
constexpr std::array<std::pair<int, int>, 5> kU = {
    std::pair<int, int>{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};

struct CaseContext {
  const RankVector* h;
  const RankVector* g;
  std::array<Mask, 4> q;
  Rational thr;  // h(full) − ε == g(full)

  Rational hv(std::initializer_list<int> is) const {
    Mask u = 0;
    for (int i : is) u |= q[std::size_t(i)];
    return h->at(u);
  }
  Rational gv(std::initializer_list<int> is) const {
    Mask u = 0;
    for (int i : is) u |= q[std::size_t(i)];
    return g->at(u);
  }
  Rational j_of(const RankVector& v) const {
    return ingleton_score(v, q[0], q[1], q[2], q[3]);
  }
  Rational jplus(const RankVector& v) const {
    auto val = [&](std::initializer_list<int> is) {
      Mask u = 0;
      for (int i : is) u |= q[std::size_t(i)];
      return v.at(u);
    };
    return val({0, 1}) + val({0, 2}) + val({0, 3}) + val({1, 2}) + val({1, 3});
  }
  Rational jminus(const RankVector& v) const {
    auto val = [&](std::initializer_list<int> is) {
      Mask u = 0;
      for (int i : is) u |= q[std::size_t(i)];
      return v.at(u);
    };
    return val({0}) + val({1}) + val({2, 3}) + val({0, 1, 2}) + val({0, 1, 3});
  }

  int pattern() const {
    int bitsmask = 0;
    for (std::size_t s = 0; s < kU.size(); ++s)
      if (hv({kU[s].first, kU[s].second}) >= thr) bitsmask |= 1 << s;
    return bitsmask;
  }
  CaseContext permuted(const Perm& p) const {
    CaseContext c = *this;
    for (int i = 0; i < 4; ++i) c.q[std::size_t(i)] = q[std::size_t(p[std::size_t(i)])];
    return c;
  }
};

void require(bool ok, int case_number, const char* what) {
  if (!ok)
    throw internal_error("perturbation case " + std::to_string(case_number) +
                         " chain failed at: " + what);
}

void check_case1(const CaseContext& c) {
  require(c.jplus(*c.g) == c.jplus(*c.h), 1, "positive part unchanged");
  require(c.jminus(*c.g) <= c.jminus(*c.h), 1, "negative part does not grow");
  require(c.j_of(*c.h) >= 0, 1, "base score nonnegative");
}

// Single biting pair: (0,1) when via_01, otherwise (0,2). Both use the
// (0,1,2) triple of the negative part.
void check_case2(const CaseContext& c, bool via_01) {
  Rational pair = via_01 ? c.hv({0, 1}) : c.hv({0, 2});
  require(pair >= c.thr, 2, "pair reaches the cap");
  require(c.jplus(*c.g) == c.jplus(*c.h) - pair + c.thr, 2, "positive part identity");
  require(c.jminus(*c.g) <= c.jminus(*c.h) - c.hv({0, 1, 2}) + c.thr, 2, "negative part bound");
  require(pair <= c.hv({0, 1, 2}), 2, "pair below its triple");
  require(c.j_of(*c.h) >= 0, 2, "base score nonnegative");
}

void check_case3(const CaseContext& c) {
  require(c.gv({0, 2}) == c.thr && c.gv({1, 2}) == c.thr, 3, "capped pairs");
  require(c.gv({0, 1}) + c.gv({0, 3}) + c.gv({1, 3}) >= c.gv({0}) + c.gv({1}) + c.gv({0, 1, 3}),
          3, "residual polymatroid inequality");
  require(c.thr + c.thr >= c.gv({2, 3}) + c.gv({0, 1, 2}), 3, "capped pairs dominate");
}

void check_case4(const CaseContext& c) {
  require(c.gv({0, 1}) == c.thr && c.gv({0, 2}) == c.thr, 4, "capped pairs");
  require(c.thr >= c.gv({0, 1, 2}) && c.thr >= c.gv({0, 1, 3}), 4, "cap dominates triples");
  require(c.gv({1, 2}) + c.gv({0, 3}) + c.gv({1, 3}) >= c.gv({0}) + c.gv({1}) + c.gv({2, 3}), 4,
          "residual polymatroid inequality");
}

void check_case5(const CaseContext& c) {
  require(c.gv({0, 2}) == c.thr && c.gv({1, 3}) == c.thr, 5, "capped pairs");
  require(c.thr >= c.gv({0, 1, 3}) && c.thr >= c.gv({2, 3}), 5, "cap dominates");
  require(c.gv({0, 1}) + c.gv({1, 2}) + c.gv({0, 3}) >= c.gv({0}) + c.gv({1}) + c.gv({0, 1, 2}),
          5, "residual polymatroid inequality");
}

void check_case6(const CaseContext& c) {
  require(c.gv({0, 2}) == c.thr && c.gv({0, 3}) == c.thr, 6, "capped pairs");
  require(c.thr >= c.gv({0, 1, 2}) && c.thr >= c.gv({0, 1, 3}), 6, "cap dominates triples");
  require(c.gv({0, 1}) + c.gv({1, 2}) + c.gv({1, 3}) >= c.gv({0}) + c.gv({1}) + c.gv({1, 2, 3}),
          6, "residual polymatroid inequality");
  require(c.gv({1, 2, 3}) >= c.gv({2, 3}), 6, "triple dominates pair");
}

void check_case7(const CaseContext& c, int pat) {
  const int t = __builtin_popcount(unsigned(pat));
  // Every biting positive term sits exactly at the cap, and the cap bounds
  // every value of the perturbed vector.
  for (std::size_t s = 0; s < kU.size(); ++s)
    if (pat >> s & 1)
      require(c.gv({kU[s].first, kU[s].second}) == c.thr, 7, "capped pair value");
  auto leq_cap = [&](std::initializer_list<int> is, const char* what) {
    require(c.gv(is) <= c.thr, 7, what);
  };
  std::vector<std::pair<int, int>> rest;
  for (std::size_t s = 0; s < kU.size(); ++s)
    if (!(pat >> s & 1)) rest.push_back(kU[s]);

  if (t == 5) {
    leq_cap({0}, "single below cap");
    leq_cap({1}, "single below cap");
    leq_cap({2, 3}, "pair below cap");
    leq_cap({0, 1, 2}, "triple below cap");
    leq_cap({0, 1, 3}, "triple below cap");
    return;
  }
  if (t == 4) {
    auto [x, y] = rest[0];
    if (x == 0) {
      require(c.gv({x, y}) >= c.gv({0}), 7, "free pair dominates its single");
      leq_cap({1}, "single below cap");
    } else {
      require(c.gv({x, y}) >= c.gv({1}), 7, "free pair dominates its single");
      leq_cap({0}, "single below cap");
    }
    leq_cap({2, 3}, "pair below cap");
    leq_cap({0, 1, 2}, "triple below cap");
    leq_cap({0, 1, 3}, "triple below cap");
    return;
  }
  // t == 3: two free pairs.
  auto is_pair = [&](int a, int b) {
    return std::find(rest.begin(), rest.end(), std::make_pair(a, b)) != rest.end();
  };
  if (is_pair(0, 1)) {
    auto other = rest[0] == std::make_pair(0, 1) ? rest[1] : rest[0];
    if (other.first == 0) {
      require(c.gv({0, 1}) >= c.gv({1}), 7, "free pair dominates single");
      require(c.gv({other.first, other.second}) >= c.gv({0}), 7, "free pair dominates single");
    } else {
      require(c.gv({0, 1}) >= c.gv({0}), 7, "free pair dominates single");
      require(c.gv({other.first, other.second}) >= c.gv({1}), 7, "free pair dominates single");
    }
    leq_cap({2, 3}, "pair below cap");
  } else if (is_pair(0, 2) && is_pair(0, 3)) {
    require(c.gv({0, 2}) + c.gv({0, 3}) >= c.gv({0}) + c.gv({0, 2, 3}), 7, "submodular pair");
    require(c.gv({0, 2, 3}) >= c.gv({2, 3}), 7, "triple dominates pair");
    leq_cap({1}, "single below cap");
  } else if (is_pair(1, 2) && is_pair(1, 3)) {
    require(c.gv({1, 2}) + c.gv({1, 3}) >= c.gv({1}) + c.gv({1, 2, 3}), 7, "submodular pair");
    require(c.gv({1, 2, 3}) >= c.gv({2, 3}), 7, "triple dominates pair");
    leq_cap({0}, "single below cap");
  } else {
    // one pair through 0, the other through 1
    for (auto [x, y] : rest)
      require(c.gv({x, y}) >= c.gv({x}), 7, "free pair dominates its single");
    leq_cap({2, 3}, "pair below cap");
  }
  leq_cap({0, 1, 2}, "triple below cap");
  leq_cap({0, 1, 3}, "triple below cap");
}

}  // namespace

PerturbationCaseReport perturbation_case(const RankVector& h, const Rational& eps,
                                         const std::array<Mask, 4>& quad) {
  const Rational& top = h.at(h.full_mask());
  if (eps < 0 || eps > top) throw input_error("epsilon must lie in [0, h(full)]");
  for (Mask a : quad) h.check_mask(a);

  RankVector g = epsilon_perturb(h, eps);
  CaseContext ctx{&h, &g, quad, top - eps};

  PerturbationCaseReport report;
  const int pat = ctx.pattern();
  for (std::size_t s = 0; s < kU.size(); ++s)
    if (pat >> s & 1) report.biting_pairs.push_back(kU[s]);
  const int t = __builtin_popcount(unsigned(pat));

  if (t == 0) {
    report.case_number = 1;
    check_case1(ctx);
  } else if (t == 1) {
    report.case_number = 2;
    if (pat & 1) {
      check_case2(ctx, true);
    } else {
      // map the biting pair onto (0, 2) with a swap symmetry
      bool done = false;
      for (const Perm& p : kSymmetries) {
        CaseContext c = ctx.permuted(p);
        if (c.pattern() == 1 << 1) {
          check_case2(c, false);
          done = true;
          break;
        }
      }
      if (!done) throw internal_error("unclassifiable single-pair pattern");
    }
  } else if (t == 2) {
    struct Canon {
      int pattern;
      int number;
      void (*check)(const CaseContext&);
    };
    // {(0,2),(1,2)} / {(0,1),(0,2)} / {(0,2),(1,3)} / {(0,2),(0,3)}
    const Canon canons[] = {{(1 << 1) | (1 << 2), 3, check_case3},
                            {(1 << 0) | (1 << 1), 4, check_case4},
                            {(1 << 1) | (1 << 4), 5, check_case5},
                            {(1 << 1) | (1 << 3), 6, check_case6}};
    bool done = false;
    for (const Perm& p : kSymmetries) {
      CaseContext c = ctx.permuted(p);
      const int cp = c.pattern();
      for (const Canon& canon : canons) {
        if (cp == canon.pattern) {
          report.case_number = canon.number;
          canon.check(c);
          done = true;
          break;
        }
      }
      if (done) break;
    }
    if (!done) throw internal_error("unclassifiable two-pair pattern");
  } else {
    report.case_number = 7;
    check_case7(ctx, pat);
  }

  report.score_after = ctx.j_of(g);
  if (report.score_after < 0)
    throw internal_error("perturbed score negative despite verified chain");
  return report;
}

}  // namespace polymat
