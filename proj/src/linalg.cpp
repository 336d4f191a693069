#include "polymat/linalg.hpp"

#include <algorithm>

namespace polymat {

namespace {

void check_same_space(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field())
    throw input_error("subspaces over different fields: " + a.field().literal() + " vs " +
                      b.field().literal());
  if (a.ambient() != b.ambient()) throw input_error("subspaces with different ambient dimensions");
}

}  // namespace

MatrixGF::MatrixGF(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols * field_.m(), 0) {
  if (cols > 64) throw size_error("ambient dimension capped at 64");
}

FElem MatrixGF::get(std::size_t r, std::size_t c) const {
  const std::uint32_t m = field_.m();
  const std::uint32_t* cell = a_.data() + (r * cols_ + c) * m;
  return FElem(cell, cell + m);
}

void MatrixGF::set(std::size_t r, std::size_t c, const FElem& e) {
  field_.check_elem(e);
  const std::uint32_t m = field_.m();
  std::copy(e.begin(), e.end(), a_.begin() + (r * cols_ + c) * m);
}

RowGF MatrixGF::row(std::size_t r) const {
  const std::size_t w = cols_ * field_.m();
  return RowGF(a_.begin() + r * w, a_.begin() + (r + 1) * w);
}

void MatrixGF::set_row(std::size_t r, const RowGF& v) {
  const std::size_t w = cols_ * field_.m();
  if (v.size() != w) throw input_error("row width mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + r * w);
}

void MatrixGF::push_row(const RowGF& v) {
  const std::size_t w = cols_ * field_.m();
  if (v.size() != w) throw input_error("row width mismatch");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

namespace {

// In-place row operations on the flat coefficient array.
struct RowOps {
  const Field& f;
  std::size_t cols;
  std::uint32_t m;

  FElem cell(const std::vector<std::uint32_t>& a, std::size_t r, std::size_t c) const {
    const std::uint32_t* p = a.data() + (r * cols + c) * m;
    return FElem(p, p + m);
  }
  void put(std::vector<std::uint32_t>& a, std::size_t r, std::size_t c, const FElem& e) const {
    std::copy(e.begin(), e.end(), a.begin() + (r * cols + c) * m);
  }
  bool cell_zero(const std::vector<std::uint32_t>& a, std::size_t r, std::size_t c) const {
    const std::uint32_t* p = a.data() + (r * cols + c) * m;
    for (std::uint32_t i = 0; i < m; ++i)
      if (p[i]) return false;
    return true;
  }
  void swap_rows(std::vector<std::uint32_t>& a, std::size_t r1, std::size_t r2) const {
    if (r1 == r2) return;
    std::swap_ranges(a.begin() + r1 * cols * m, a.begin() + (r1 + 1) * cols * m,
                     a.begin() + r2 * cols * m);
  }
  // row r *= c
  void scale_row(std::vector<std::uint32_t>& a, std::size_t r, const FElem& c) const {
    for (std::size_t j = 0; j < cols; ++j) put(a, r, j, f.mul(cell(a, r, j), c));
  }
  // row dst -= c * row src
  void submul_row(std::vector<std::uint32_t>& a, std::size_t dst, std::size_t src,
                  const FElem& c) const {
    if (f.is_zero(c)) return;
    for (std::size_t j = 0; j < cols; ++j)
      put(a, dst, j, f.sub(cell(a, dst, j), f.mul(c, cell(a, src, j))));
  }
};

}  // namespace

MatrixGF rref(const MatrixGF& M) {
  MatrixGF R = M;
  RowOps ops{R.field(), R.cols(), R.field().m()};
  std::size_t lead = 0;
  for (std::size_t col = 0; col < R.cols() && lead < R.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < R.rows() && ops.cell_zero(R.a_, piv, col)) ++piv;
    if (piv == R.rows()) continue;
    ops.swap_rows(R.a_, lead, piv);
    FElem inv = R.field().inv(ops.cell(R.a_, lead, col));
    ops.scale_row(R.a_, lead, inv);
    for (std::size_t r = 0; r < R.rows(); ++r) {
      if (r == lead) continue;
      ops.submul_row(R.a_, r, lead, ops.cell(R.a_, r, col));
    }
    ++lead;
  }
  return R;
}

std::size_t matrix_rank(const MatrixGF& M) {
  MatrixGF R = rref(M);
  RowOps ops{R.field(), R.cols(), R.field().m()};
  std::size_t rank = 0;
  for (std::size_t r = 0; r < R.rows(); ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < R.cols() && zero; ++c) zero = ops.cell_zero(R.data(), r, c);
    if (!zero) ++rank;
  }
  return rank;
}

MatrixGF invert(const MatrixGF& M) {
  if (M.rows() != M.cols()) throw input_error("invert needs a square matrix");
  const std::size_t d = M.rows();
  // Gauss-Jordan on [M | I].
  MatrixGF aug(M.field(), d, 2 * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) aug.set(r, c, M.get(r, c));
    aug.set(r, d + r, M.field().one());
  }
  MatrixGF R = rref(aug);
  for (std::size_t r = 0; r < d; ++r) {
    FElem diag = R.get(r, r);
    if (M.field().is_zero(diag) || diag != M.field().one())
      throw verification_error("matrix is singular");
  }
  MatrixGF inv(M.field(), d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) inv.set(r, c, R.get(r, d + c));
  return inv;
}

MatrixGF matmul(const MatrixGF& A, const MatrixGF& B) {
  if (A.field() != B.field() || A.cols() != B.rows()) throw input_error("matmul shape mismatch");
  const Field& f = A.field();
  MatrixGF C(f, A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      FElem aik = A.get(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < B.cols(); ++j)
        C.set(i, j, f.add(C.get(i, j), f.mul(aik, B.get(k, j))));
    }
  return C;
}

Subspace Subspace::zero(const Field& f, std::uint32_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = MatrixGF(f, 0, ambient);
  return s;
}

Subspace Subspace::full(const Field& f, std::uint32_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = MatrixGF(f, ambient, ambient);
  for (std::uint32_t i = 0; i < ambient; ++i) s.basis_.set(i, i, f.one());
  return s;
}

Subspace Subspace::span(const MatrixGF& vectors) {
  MatrixGF R = rref(vectors);
  RowOps ops{R.field(), R.cols(), R.field().m()};
  std::size_t rank = 0;
  for (std::size_t r = 0; r < R.rows(); ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < R.cols() && zero; ++c) zero = ops.cell_zero(R.data(), r, c);
    if (zero) break;  // zero rows are at the bottom
    ++rank;
  }
  Subspace s;
  s.ambient_ = std::uint32_t(R.cols());
  s.basis_ = MatrixGF(R.field(), rank, R.cols());
  for (std::size_t r = 0; r < rank; ++r) s.basis_.set_row(r, R.row(r));
  return s;
}

bool Subspace::contains_vector(const RowGF& v) const {
  const Field& f = field();
  const std::uint32_t m = f.m();
  if (v.size() != std::size_t(ambient_) * m) throw input_error("vector width mismatch");
  RowGF u = v;
  // Reduce against the RREF basis using pivot columns.
  for (std::uint32_t r = 0; r < dim(); ++r) {
    // pivot column of row r = first nonzero cell
    std::size_t pc = 0;
    while (pc < ambient_) {
      FElem cell = basis_.get(r, pc);
      if (!f.is_zero(cell)) break;
      ++pc;
    }
    FElem coef(u.begin() + pc * m, u.begin() + (pc + 1) * m);
    if (f.is_zero(coef)) continue;
    RowGF br = basis_.row(r);
    for (std::size_t c = 0; c < ambient_; ++c) {
      FElem uc(u.begin() + c * m, u.begin() + (c + 1) * m);
      FElem bc(br.begin() + c * m, br.begin() + (c + 1) * m);
      FElem nc = f.sub(uc, f.mul(coef, bc));
      std::copy(nc.begin(), nc.end(), u.begin() + c * m);
    }
  }
  return std::all_of(u.begin(), u.end(), [](std::uint32_t c) { return c == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  check_same_space(*this, other);
  for (std::uint32_t r = 0; r < other.dim(); ++r)
    if (!contains_vector(other.basis().row(r))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_same_space(a, b);
  MatrixGF stacked(a.field(), 0, a.ambient());
  for (std::uint32_t r = 0; r < a.dim(); ++r) stacked.push_row(a.basis().row(r));
  for (std::uint32_t r = 0; r < b.dim(); ++r) stacked.push_row(b.basis().row(r));
  return Subspace::span(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_space(a, b);
  const Field& f = a.field();
  const std::size_t ra = a.dim(), rb = b.dim(), d = a.ambient();
  // Row-reduce the stacked bases while tracking the transform T; combos that
  // reduce to zero give vectors in both row spaces.
  const std::size_t n = ra + rb;
  MatrixGF work(f, n, d + n);
  for (std::size_t r = 0; r < ra; ++r) {
    RowGF v = a.basis().row(r);
    for (std::size_t c = 0; c < d; ++c) work.set(r, c, a.basis().get(r, c));
    work.set(r, d + r, f.one());
  }
  for (std::size_t r = 0; r < rb; ++r) {
    for (std::size_t c = 0; c < d; ++c) work.set(ra + r, c, b.basis().get(r, c));
    work.set(ra + r, d + ra + r, f.one());
  }
  // Eliminate only over the first d columns.
  RowOps ops{f, d + n, f.m()};
  std::vector<std::uint32_t> data = work.data();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < d && lead < n; ++col) {
    std::size_t piv = lead;
    while (piv < n && ops.cell_zero(data, piv, col)) ++piv;
    if (piv == n) continue;
    ops.swap_rows(data, lead, piv);
    FElem inv = f.inv(ops.cell(data, lead, col));
    ops.scale_row(data, lead, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == lead) continue;
      ops.submul_row(data, r, lead, ops.cell(data, r, col));
    }
    ++lead;
  }
  // Rows whose first d columns vanished: t . [A;B] = 0, so sum over the A part
  // lands in A ∩ B.
  MatrixGF gens(f, 0, std::uint32_t(d));
  const std::uint32_t m = f.m();
  for (std::size_t r = lead; r < n; ++r) {
    RowGF v(d * m, 0);
    for (std::size_t i = 0; i < ra; ++i) {
      FElem t = ops.cell(data, r, d + i);
      if (f.is_zero(t)) continue;
      RowGF ai = a.basis().row(i);
      for (std::size_t c = 0; c < d; ++c) {
        FElem vc(v.begin() + c * m, v.begin() + (c + 1) * m);
        FElem ac(ai.begin() + c * m, ai.begin() + (c + 1) * m);
        FElem nc = f.add(vc, f.mul(t, ac));
        std::copy(nc.begin(), nc.end(), v.begin() + c * m);
      }
    }
    gens.push_row(v);
  }
  return Subspace::span(gens);
}

Subspace complement(const Subspace& a) {
  const Field& f = a.field();
  const std::uint32_t d = a.ambient();
  MatrixGF working = a.basis();
  MatrixGF chosen(f, 0, d);
  std::size_t need = d - a.dim();
  for (std::uint32_t i = 0; i < d && chosen.rows() < need; ++i) {
    RowGF e(std::size_t(d) * f.m(), 0);
    FElem one = f.one();
    std::copy(one.begin(), one.end(), e.begin() + std::size_t(i) * f.m());
    MatrixGF trial = working;
    trial.push_row(e);
    if (matrix_rank(trial) > matrix_rank(working)) {
      chosen.push_row(e);
      working.push_row(e);
    }
  }
  if (chosen.rows() != need) throw internal_error("complement construction failed");
  return Subspace::span(chosen);
}

namespace {

// Matrix of u -> component of u in complement(a), as a right-multiplier on row
// vectors: P = M^-1 S M with M = [basis(a); basis(a*)] and S selecting the a*
// rows.
MatrixGF projector_matrix(const Subspace& a) {
  const Field& f = a.field();
  const std::uint32_t d = a.ambient();
  Subspace comp = complement(a);
  MatrixGF M(f, d, d);
  for (std::uint32_t r = 0; r < a.dim(); ++r) M.set_row(r, a.basis().row(r));
  for (std::uint32_t r = 0; r < comp.dim(); ++r) M.set_row(a.dim() + r, comp.basis().row(r));
  MatrixGF Minv = invert(M);
  MatrixGF S(f, d, d);
  for (std::uint32_t r = a.dim(); r < d; ++r) S.set(r, r, f.one());
  return matmul(matmul(Minv, S), M);
}

RowGF apply_right(const Field& f, const RowGF& u, const MatrixGF& P) {
  const std::uint32_t m = f.m();
  const std::size_t d = P.rows();
  RowGF out(d * m, 0);
  for (std::size_t i = 0; i < d; ++i) {
    FElem ui(u.begin() + i * m, u.begin() + (i + 1) * m);
    if (f.is_zero(ui)) continue;
    for (std::size_t j = 0; j < d; ++j) {
      FElem pij = P.get(i, j);
      if (f.is_zero(pij)) continue;
      FElem oj(out.begin() + j * m, out.begin() + (j + 1) * m);
      FElem nj = f.add(oj, f.mul(ui, pij));
      std::copy(nj.begin(), nj.end(), out.begin() + j * m);
    }
  }
  return out;
}

}  // namespace

Subspace project_away(const Subspace& a, const Subspace& b) {
  check_same_space(a, b);
  if (a.dim() == 0) return b;
  MatrixGF P = projector_matrix(a);
  MatrixGF gens(a.field(), 0, a.ambient());
  for (std::uint32_t r = 0; r < b.dim(); ++r)
    gens.push_row(apply_right(a.field(), b.basis().row(r), P));
  return Subspace::span(gens);
}

RowGF project_vector_away(const Subspace& a, const RowGF& u) {
  if (a.dim() == 0) return u;
  MatrixGF P = projector_matrix(a);
  return apply_right(a.field(), u, P);
}

}  // namespace polymat
