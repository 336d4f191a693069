#include <doctest.h>

#include "oracles.hpp"
#include "polymat/linalg.hpp"
#include "polymat/rng.hpp"

using namespace polymat;

namespace {

MatrixGF rows_from(const Field& f, std::uint32_t d,
                   std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
  MatrixGF m(f, rows.size(), d);
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (std::uint32_t v : row) m.set(r, c++, FElem{v});
    ++r;
  }
  return m;
}

Subspace span_of(const Field& f, std::uint32_t d,
                 std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
  return Subspace::span(rows_from(f, d, rows));
}

}  // namespace

TEST_CASE("rref leaves the identity alone") {
  Field f = Field::make(2, 1);
  MatrixGF id = rows_from(f, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(rref(id) == id);
}

TEST_CASE("rank of the three pair-sums depends on the characteristic") {
  // rows u1+u2, u2+u3, u1+u3
  auto rows = {std::initializer_list<std::uint32_t>{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  CHECK(matrix_rank(rows_from(Field::make(2, 1), 3, rows)) == 2);
  CHECK(matrix_rank(rows_from(Field::make(3, 1), 3, rows)) == 3);
}

TEST_CASE("span, sum and dim basics") {
  Field f = Field::make(2, 1);
  Subspace u1 = span_of(f, 3, {{1, 0, 0}});
  Subspace u2 = span_of(f, 3, {{0, 1, 0}});
  CHECK(u1.dim() == 1);
  CHECK(sum(u1, u2).dim() == 2);
  CHECK(sum(u1, u1) == u1);
  CHECK_THROWS_AS(sum(u1, span_of(f, 2, {{1, 0}})), input_error);
}

TEST_CASE("intersection basics and a Fano line") {
  Field f = Field::make(2, 1);
  Subspace u1 = span_of(f, 3, {{1, 0, 0}});
  Subspace u2 = span_of(f, 3, {{0, 1, 0}});
  CHECK(intersect(u1, u2).dim() == 0);
  CHECK(intersect(u1, u1) == u1);
  // ⟨W1⟩ ∩ ⟨Y1,Y2⟩ = ⟨u1+u2⟩
  Subspace w1 = span_of(f, 3, {{1, 1, 0}});
  Subspace y12 = span_of(f, 3, {{1, 0, 0}, {0, 1, 0}});
  CHECK(intersect(w1, y12) == w1);
}

TEST_CASE("complement satisfies both defining conditions") {
  Field f = Field::make(2, 1);
  Subspace zero = Subspace::zero(f, 3);
  CHECK(complement(zero) == Subspace::full(f, 3));
  CHECK(complement(Subspace::full(f, 3)) == zero);

  Subspace diag = span_of(f, 3, {{1, 1, 0}});
  Subspace comp = complement(diag);
  CHECK(comp.dim() == 2);
  CHECK(sum(diag, comp).dim() == 3);
  CHECK(intersect(diag, comp).dim() == 0);

  SplitMix rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Field g = trial % 2 ? Field::make(3, 1) : Field::make(2, 1);
    std::uint32_t d = 1 + std::uint32_t(rng.below(5));
    Subspace a = oracle::random_subspace(rng, g, d, std::uint32_t(rng.below(d + 1)));
    Subspace c = complement(a);
    CHECK(c.dim() == d - a.dim());
    CHECK(sum(a, c).dim() == d);
    CHECK(intersect(a, c).dim() == 0);
  }
}

TEST_CASE("projection away from a subspace") {
  Field f = Field::make(2, 1);
  Subspace zero = Subspace::zero(f, 3);
  Subspace b = span_of(f, 3, {{1, 1, 0}, {0, 0, 1}});
  CHECK(project_away(zero, b) == b);
  CHECK(project_away(b, b).dim() == 0);

  // axis u1 inside the Fano picture
  Subspace u1 = span_of(f, 3, {{1, 0, 0}});
  Subspace w1 = span_of(f, 3, {{1, 1, 0}});
  CHECK(project_away(u1, w1).dim() == 1);
  CHECK(project_away(u1, u1).dim() == 0);
}

TEST_CASE("projection identities on random subspaces") {
  SplitMix rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    Field f = trial % 2 ? Field::make(3, 1) : Field::make(2, 1);
    std::uint32_t d = 2 + std::uint32_t(rng.below(5));  // up to 6
    Subspace a = oracle::random_subspace(rng, f, d, std::uint32_t(rng.below(d + 1)));
    Subspace b1 = oracle::random_subspace(rng, f, d, std::uint32_t(rng.below(d + 1)));
    Subspace b2 = oracle::random_subspace(rng, f, d, std::uint32_t(rng.below(d + 1)));

    // H(T_A(B)) = H(B | A)
    CHECK(project_away(a, b1).dim() == sum(a, b1).dim() - a.dim());

    // H(T_A(⟨B1,B2⟩)) = H(T_A(B1), T_A(B2))
    Subspace joint = project_away(a, sum(b1, b2));
    Subspace parts = sum(project_away(a, b1), project_away(a, b2));
    CHECK(joint == parts);

    // sandwich: H(B1B2) >= H(T_A(B1),T_A(B2)) >= H(B1B2) - H(A)
    std::uint32_t before = sum(b1, b2).dim();
    std::uint32_t after = parts.dim();
    CHECK(before >= after);
    CHECK(after + a.dim() >= before);

    // monotone: B1 ⊆ ⟨B1,B2⟩ projects inside the projection of ⟨B1,B2⟩
    CHECK(joint.contains(project_away(a, b1)));

    // disjointness preserves dimension
    if (intersect(a, b1).dim() == 0) CHECK(project_away(a, b1).dim() == b1.dim());

    // modular identity
    CHECK(b1.dim() + b2.dim() == sum(b1, b2).dim() + intersect(b1, b2).dim());
  }
}

TEST_CASE("canonical bases make equality a data comparison") {
  Field f = Field::make(3, 1);
  Subspace s1 = span_of(f, 3, {{1, 2, 0}, {0, 1, 1}});
  Subspace s2 = span_of(f, 3, {{1, 0, 1}, {0, 2, 2}});  // same row space, scaled/mixed
  CHECK(s1 == s2);
  CHECK(s1.basis().data() == s2.basis().data());
}

TEST_CASE("matrices over extension fields reduce correctly") {
  Field f = Field::make(2, 2);
  MatrixGF m(f, 2, 2);
  m.set(0, 0, {0, 1});  // x
  m.set(0, 1, {1, 0});
  m.set(1, 0, {1, 1});  // x+1 = x^2
  m.set(1, 1, {0, 1});  // x   -> row2 = x * row1
  CHECK(matrix_rank(m) == 1);
}
