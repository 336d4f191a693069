#pragma once

#include <cstdint>
#include <vector>

#include "polymat/gf.hpp"

namespace polymat {

/// One ambient vector: cols * m coefficients, cell-major (coefficients of
/// coordinate 0 first).
using RowGF = std::vector<std::uint32_t>;

/// Dense row-major matrix over GF(p^m). Rows are ambient vectors.
class MatrixGF {
 public:
  MatrixGF() = default;
  MatrixGF(Field f, std::size_t rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FElem get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FElem& e);

  RowGF row(std::size_t r) const;
  void set_row(std::size_t r, const RowGF& v);

  /// Appends a row (ambient vector) at the bottom.
  void push_row(const RowGF& v);

  const std::vector<std::uint32_t>& data() const { return a_; }

  bool operator==(const MatrixGF& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  friend MatrixGF rref(const MatrixGF&);
  friend class Subspace;
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;  // rows*cols*m coefficients
};

/// Reduced row echelon form; zero rows sink to the bottom. Row space preserved.
MatrixGF rref(const MatrixGF& M);

std::size_t matrix_rank(const MatrixGF& M);

/// Inverse of a square matrix; throws verification_error if singular.
MatrixGF invert(const MatrixGF& M);

MatrixGF matmul(const MatrixGF& A, const MatrixGF& B);

/// Subspace of GF(p^m)^d in canonical form: the basis is the RREF of any
/// generating set with zero rows removed. Equal subspaces have identical
/// basis matrices, so equality is a plain data comparison.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const Field& f, std::uint32_t ambient);
  static Subspace full(const Field& f, std::uint32_t ambient);
  /// Span of the rows of `vectors`.
  static Subspace span(const MatrixGF& vectors);

  const Field& field() const { return basis_.field(); }
  std::uint32_t ambient() const { return ambient_; }
  std::uint32_t dim() const { return std::uint32_t(basis_.rows()); }
  const MatrixGF& basis() const { return basis_; }

  bool contains_vector(const RowGF& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::uint32_t ambient_ = 0;
  MatrixGF basis_;  // dim x ambient, RREF
};

Subspace sum(const Subspace& a, const Subspace& b);

/// dim(a ∩ b) always equals dim a + dim b - dim(a + b).
Subspace intersect(const Subspace& a, const Subspace& b);

/// Deterministic complement: span of the lexicographically first standard
/// basis vectors independent of `a`. Satisfies a + a* = W, a ∩ a* = 0.
Subspace complement(const Subspace& a);

/// Projection away from `a`: image of `b` under u -> component of u in
/// complement(a), so dim = dim(a + b) - dim a.
Subspace project_away(const Subspace& a, const Subspace& b);

/// Projection of a single vector away from `a`.
RowGF project_vector_away(const Subspace& a, const RowGF& u);

}  // namespace polymat
