#include "polymat/represent.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace polymat {

void Arrangement::validate() const {
  if (subspaces.empty()) throw input_error("arrangement needs at least one subspace");
  if (subspaces.size() > 24) throw size_error("arrangement capped at 24 subspaces");
  for (const Subspace& s : subspaces) {
    if (s.field() != field) throw input_error("arrangement subspace over a different field");
    if (s.ambient() != ambient) throw input_error("arrangement subspace with different ambient");
  }
  if (!labels.empty() && labels.size() != subspaces.size())
    throw input_error("arrangement label count mismatch");
}

std::vector<Subspace> subset_spans(const Arrangement& arr) {
  arr.validate();
  const std::size_t total = std::size_t(1) << arr.size();
  std::vector<Subspace> spans;
  spans.reserve(total);
  spans.push_back(Subspace::zero(arr.field, arr.ambient));
  for (std::size_t mask = 1; mask < total; ++mask) {
    const int low = lowest_bit(Mask(mask));
    spans.push_back(sum(spans[mask & (mask - 1)], arr.subspaces[low]));
  }
  return spans;
}

RankVector rank_vector(const Arrangement& arr) {
  std::vector<Subspace> spans = subset_spans(arr);
  RankVector h(arr.ground());
  for (std::size_t mask = 0; mask < spans.size(); ++mask)
    h.values()[mask] = Rational(spans[mask].dim());
  return h;
}

Arrangement lift(const Arrangement& arr, std::uint32_t degree) {
  arr.validate();
  if (!arr.field.prime())
    throw unsupported_error("lift needs a prime base field, got " + arr.field.literal());
  if (degree == 1) return arr;
  Field target = Field::make(arr.field.p(), degree);
  Arrangement out;
  out.field = target;
  out.ambient = arr.ambient;
  out.labels = arr.labels;
  for (const Subspace& s : arr.subspaces) {
    MatrixGF basis(target, s.dim(), arr.ambient);
    for (std::uint32_t r = 0; r < s.dim(); ++r)
      for (std::uint32_t c = 0; c < arr.ambient; ++c)
        basis.set(r, c, target.embed_from_prime(arr.field, s.basis().get(r, c)));
    out.subspaces.push_back(Subspace::span(basis));
  }
  return out;
}

namespace {

// Distinct flats ⟨V_α⟩ with 1 <= dim < full rank. The zero flat is excluded:
// the scan skips u = 0 anyway.
std::vector<Subspace> deficient_flats(const std::vector<Subspace>& spans) {
  const std::uint32_t full_rank = spans.back().dim();
  std::vector<Subspace> flats;
  std::set<std::vector<std::uint32_t>> seen;
  for (const Subspace& s : spans) {
    if (s.dim() == 0 || s.dim() >= full_rank) continue;
    if (seen.insert(s.basis().data()).second) flats.push_back(s);
  }
  return flats;
}

}  // namespace

ExternalVector find_external_vector(const Arrangement& arr) {
  arr.validate();
  std::vector<Subspace> base_spans = subset_spans(arr);
  const std::uint32_t full_rank = base_spans.back().dim();
  if (full_rank == 0) throw input_error("zero arrangement has no external vector");
  const std::size_t flat_count = deficient_flats(base_spans).size();

  // Smallest degree with order^degree > |Q|, per the volume bound.
  const std::uint64_t q = arr.field.order();
  std::uint32_t degree = 1;
  {
    std::uint64_t vol = q;
    while (vol <= flat_count) {
      ++degree;
      vol *= q;
    }
  }

  for (;; ++degree) {
    if (degree > 1 && !arr.field.prime())
      throw unsupported_error(
          "external vector needs a field extension of a non-prime base (" + arr.field.literal() +
          "); lifting non-prime fields is not supported");
    Arrangement lifted = degree == 1 ? arr : lift(arr, degree);
    const Field& f = lifted.field;
    std::vector<Subspace> spans = degree == 1 ? std::move(base_spans) : subset_spans(lifted);
    std::vector<Subspace> flats = deficient_flats(spans);
    const Subspace& whole = spans.back();
    const std::uint32_t r = whole.dim();
    const std::uint32_t m = f.m();
    const std::uint64_t order = f.order();

    // Odometer over span coordinates (c_1..c_r), first coordinate most
    // significant, each coordinate in element-index order.
    std::vector<std::uint64_t> coord(r, 0);
    bool exhausted = false;
    while (!exhausted) {
      // advance to the next tuple (start from all-zero = zero vector, skip it)
      std::size_t pos = r;
      while (pos-- > 0) {
        if (++coord[pos] < order) break;
        coord[pos] = 0;
        if (pos == 0) exhausted = true;
      }
      if (exhausted) break;
      RowGF u(std::size_t(lifted.ambient) * m, 0);
      for (std::uint32_t i = 0; i < r; ++i) {
        if (coord[i] == 0) continue;
        FElem ci = f.from_index(coord[i]);
        RowGF bi = whole.basis().row(i);
        for (std::uint32_t c = 0; c < lifted.ambient; ++c) {
          FElem uc(u.begin() + std::size_t(c) * m, u.begin() + std::size_t(c + 1) * m);
          FElem bc(bi.begin() + std::size_t(c) * m, bi.begin() + std::size_t(c + 1) * m);
          FElem nc = f.add(uc, f.mul(ci, bc));
          std::copy(nc.begin(), nc.end(), u.begin() + std::size_t(c) * m);
        }
      }
      bool inside = false;
      for (const Subspace& flat : flats)
        if (flat.contains_vector(u)) {
          inside = true;
          break;
        }
      if (!inside) return ExternalVector{degree, std::move(lifted), std::move(u)};
    }
    // Scan failed; grow the field and retry (cannot happen once
    // order^degree > |Q|, but kept as a safety net).
    base_spans.clear();
  }
}

Arrangement integer_perturb(const Arrangement& arr, std::uint32_t k) {
  arr.validate();
  RankVector before = rank_vector(arr);
  const Rational full_rank = before.at(before.full_mask());
  if (k < 1 || Rational(k) > full_rank)
    throw input_error("perturbation step k must satisfy 0 < k <= rank(full)");

  Arrangement cur = arr;
  for (std::uint32_t round = 0; round < k; ++round) {
    ExternalVector ev = find_external_vector(cur);
    cur = std::move(ev.lifted);
    MatrixGF gen(cur.field, 0, cur.ambient);
    gen.push_row(ev.vector_);
    Subspace axis = Subspace::span(gen);
    for (Subspace& s : cur.subspaces) s = project_away(axis, s);
  }

  // Postcondition: rank vector equals min(h(α), h(full) − k) entrywise.
  RankVector after = rank_vector(cur);
  const Rational cap = full_rank - Rational(k);
  for (std::size_t mask = 0; mask < before.values().size(); ++mask) {
    Rational expect = std::min(before.values()[mask], cap);
    if (after.values()[mask] != expect) {
      std::ostringstream os;
      os << "integer_perturb postcondition failed at mask 0x" << std::hex << mask;
      throw verification_error(os.str());
    }
  }
  return cur;
}

namespace {

Subspace union_span(const Arrangement& arr, Mask alpha) {
  Subspace s = Subspace::zero(arr.field, arr.ambient);
  for (std::uint32_t i = 0; i < arr.size(); ++i)
    if (alpha >> i & 1) s = sum(s, arr.subspaces[i]);
  return s;
}

Arrangement project_all(const Arrangement& arr, const Subspace& axis) {
  Arrangement out = arr;
  for (Subspace& s : out.subspaces) s = project_away(axis, s);
  return out;
}

}  // namespace

Arrangement fix_conditional(const Arrangement& arr, std::uint32_t c_index, Mask alpha) {
  arr.validate();
  if (c_index >= arr.size()) throw input_error("subspace index out of range");
  if (alpha >> c_index & 1) throw input_error("conditioned index must not appear in the subset");
  if (alpha >= (Mask(1) << arr.size())) throw input_error("subset mask out of range");

  const Subspace& vc = arr.subspaces[c_index];
  Subspace valpha = union_span(arr, alpha);

  // Greedy basis of V_c independent of ⟨V_α⟩: spans ⟨V_c, V_α⟩ together with
  // V_α and meets it only in 0.
  MatrixGF picked(arr.field, 0, arr.ambient);
  Subspace working = valpha;
  for (std::uint32_t r = 0; r < vc.dim(); ++r) {
    RowGF v = vc.basis().row(r);
    if (!working.contains_vector(v)) {
      picked.push_row(v);
      MatrixGF ext(arr.field, 0, arr.ambient);
      for (std::uint32_t i = 0; i < working.dim(); ++i) ext.push_row(working.basis().row(i));
      ext.push_row(v);
      working = Subspace::span(ext);
    }
  }
  Subspace axis = Subspace::span(picked);

  const std::uint32_t old_cond = sum(vc, valpha).dim() - valpha.dim();
  if (axis.dim() != old_cond) throw internal_error("conditional fix: dim A != H(C|alpha)");

  Arrangement out = project_all(arr, axis);

  Subspace new_c = out.subspaces[c_index];
  Subspace new_alpha = union_span(out, alpha);
  if (sum(new_c, new_alpha).dim() != new_alpha.dim())
    throw verification_error("conditional fix failed: H(C|alpha) != 0 after projection");
  return out;
}

Arrangement fix_independence(const Arrangement& arr, Mask beta) {
  arr.validate();
  if (beta >= (Mask(1) << arr.size())) throw input_error("subset mask out of range");
  if (popcount(beta) < 2) throw input_error("independence fix needs at least two subspaces");

  std::vector<std::uint32_t> idx;
  for (std::uint32_t i = 0; i < arr.size(); ++i)
    if (beta >> i & 1) idx.push_back(i);

  // Old conditional dims H(V_j | V_{β∖j}) and the joint rank.
  Subspace joint = union_span(arr, beta);
  std::map<std::uint32_t, std::uint32_t> cond_dim;
  Rational cond_sum = 0;
  for (std::uint32_t j : idx) {
    Subspace rest = union_span(arr, beta & ~(Mask(1) << j));
    cond_dim[j] = joint.dim() - rest.dim();
    cond_sum += cond_dim[j];
  }

  Subspace axis = Subspace::zero(arr.field, arr.ambient);
  for (std::uint32_t j : idx) {
    Subspace rest = union_span(arr, beta & ~(Mask(1) << j));
    axis = sum(axis, intersect(arr.subspaces[j], rest));
  }

  Arrangement out = project_all(arr, axis);

  Subspace new_joint = union_span(out, beta);
  std::uint32_t dim_total = 0;
  for (std::uint32_t j : idx) {
    if (out.subspaces[j].dim() != cond_dim[j])
      throw verification_error("independence fix failed: projected dim != H(V_j | V_{beta\\j})");
    dim_total += out.subspaces[j].dim();
  }
  if (new_joint.dim() != dim_total)
    throw verification_error("independence fix failed: joint rank is not the sum of dims");
  if (Rational(axis.dim()) != Rational(joint.dim()) - cond_sum)
    throw verification_error("independence fix failed: dim A identity does not hold");
  return out;
}

void write_arr(std::ostream& os, const Arrangement& arr) {
  arr.validate();
  os << "arr " << arr.field.literal() << " " << arr.ambient << " " << arr.size() << "\n";
  for (std::uint32_t i = 0; i < arr.size(); ++i) {
    const Subspace& s = arr.subspaces[i];
    std::string name = arr.labels.empty() ? "S" + std::to_string(i) : arr.labels[i];
    os << "subspace " << name << " " << s.dim() << "\n";
    for (std::uint32_t r = 0; r < s.dim(); ++r) {
      for (std::uint32_t c = 0; c < arr.ambient; ++c) {
        if (c) os << " ";
        os << arr.field.elem_str(s.basis().get(r, c));
      }
      os << "\n";
    }
  }
}

Arrangement read_arr(std::istream& is) {
  std::string word;
  if (!(is >> word) || word != "arr") throw input_error("not an arr v1 file");
  std::string field_lit;
  std::uint32_t ambient = 0, count = 0;
  if (!(is >> field_lit >> ambient >> count)) throw input_error("bad arr v1 header");
  Arrangement arr;
  arr.field = Field::parse(field_lit);
  arr.ambient = ambient;
  for (std::uint32_t i = 0; i < count; ++i) {
    std::string name;
    std::uint32_t rows_n = 0;
    if (!(is >> word) || word != "subspace" || !(is >> name >> rows_n))
      throw input_error("bad subspace block in arr v1 file");
    MatrixGF rows(arr.field, 0, ambient);
    for (std::uint32_t r = 0; r < rows_n; ++r) {
      RowGF v;
      v.reserve(std::size_t(ambient) * arr.field.m());
      for (std::uint32_t c = 0; c < ambient; ++c) {
        std::string lit;
        if (!(is >> lit)) throw input_error("truncated subspace row in arr v1 file");
        FElem e = arr.field.elem_parse(lit);
        v.insert(v.end(), e.begin(), e.end());
      }
      rows.push_row(v);
    }
    arr.subspaces.push_back(Subspace::span(rows));
    arr.labels.push_back(name);
  }
  arr.validate();
  return arr;
}

void save_arr(const std::string& path, const Arrangement& arr) {
  std::ofstream os(path);
  if (!os) throw input_error("cannot write " + path);
  write_arr(os, arr);
}

Arrangement load_arr(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw input_error("cannot read " + path);
  return read_arr(is);
}

}  // namespace polymat
