#include "polymat/cone.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace polymat {

std::vector<Subspace> all_subspaces(const Field& f, std::uint32_t ambient) {
  std::vector<Subspace> out;
  out.push_back(Subspace::zero(f, ambient));
  const std::uint64_t q = f.order();
  for (std::uint32_t r = 1; r <= ambient; ++r) {
    // pivot column combinations, ascending
    std::vector<std::uint32_t> piv(r);
    for (std::uint32_t i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      // free cells: (row i, col c) with c not a pivot and c > piv[i]
      std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells;
      for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t c = piv[i] + 1; c < ambient; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end())
            free_cells.push_back({i, c});
      std::vector<std::uint64_t> value(free_cells.size(), 0);
      while (true) {
        MatrixGF basis(f, r, ambient);
        for (std::uint32_t i = 0; i < r; ++i) basis.set(i, piv[i], f.one());
        for (std::size_t k = 0; k < free_cells.size(); ++k)
          basis.set(free_cells[k].first, free_cells[k].second, f.from_index(value[k]));
        Subspace s;
        s = Subspace::span(basis);
        out.push_back(std::move(s));
        // odometer over free cells
        std::size_t pos = value.size();
        bool done = true;
        while (pos-- > 0) {
          if (++value[pos] < q) {
            done = false;
            break;
          }
          value[pos] = 0;
        }
        if (done) break;
      }
      // next pivot combination
      std::int32_t i = std::int32_t(r) - 1;
      while (i >= 0 && piv[std::size_t(i)] == ambient - r + std::uint32_t(i)) --i;
      if (i < 0) break;
      ++piv[std::size_t(i)];
      for (std::uint32_t j = std::uint32_t(i) + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::array<std::uint8_t, 16>& k) const {
    std::uint64_t a, b;
    std::memcpy(&a, k.data(), 8);
    std::memcpy(&b, k.data() + 8, 8);
    a ^= b * 0x9E3779B97F4A7C15ull;
    a ^= a >> 29;
    a *= 0xBF58476D1CE4E5B9ull;
    return std::size_t(a ^ (a >> 32));
  }
};

}  // namespace

GeneratorSet enumerate_generators(std::uint32_t n, const Field& f, std::uint32_t dim) {
  if (n < 1 || n > 4) throw size_error("generator enumeration supports 1 <= n <= 4");
  if (dim < 1 || dim > 4) throw size_error("generator enumeration supports ambient dim <= 4");

  std::vector<Subspace> spaces = all_subspaces(f, dim);
  const std::size_t S = spaces.size();

  // join table: canonical id of span(S_i ∪ S_j)
  std::unordered_map<std::string, std::uint16_t> id_of;
  id_of.reserve(S * 2);
  auto key_of = [](const Subspace& s) {
    const auto& d = s.basis().data();
    std::string k(reinterpret_cast<const char*>(d.data()), d.size() * sizeof(std::uint32_t));
    k.push_back(char(s.dim()));
    return k;
  };
  for (std::size_t i = 0; i < S; ++i) id_of[key_of(spaces[i])] = std::uint16_t(i);
  std::vector<std::uint16_t> join(S * S);
  for (std::size_t i = 0; i < S; ++i) {
    join[i * S + i] = std::uint16_t(i);
    for (std::size_t j = i + 1; j < S; ++j) {
      Subspace u = sum(spaces[i], spaces[j]);
      auto it = id_of.find(key_of(u));
      if (it == id_of.end()) throw internal_error("join fell outside the subspace list");
      join[i * S + j] = it->second;
      join[j * S + i] = it->second;
    }
  }
  std::vector<std::uint8_t> dim_of(S);
  for (std::size_t i = 0; i < S; ++i) dim_of[i] = std::uint8_t(spaces[i].dim());

  const std::size_t masks = std::size_t(1) << n;
  std::vector<std::uint32_t> low_index(masks, 0), rest_mask(masks, 0);
  for (std::size_t mask = 1; mask < masks; ++mask) {
    low_index[mask] = std::uint32_t(lowest_bit(Mask(mask)));
    rest_mask[mask] = std::uint32_t(mask & (mask - 1));
  }

  GeneratorSet out;
  out.ground = GroundSet(n);
  out.subspace_count = S;
  out.tuples_scanned = 1;
  for (std::uint32_t i = 0; i < n; ++i) out.tuples_scanned *= S;

  std::unordered_map<std::array<std::uint8_t, 16>, std::size_t, KeyHash> seen;
  std::vector<std::uint16_t> tuple(n, 0);
  std::vector<std::uint16_t> ids(masks, 0);
  std::array<std::uint8_t, 16> key{};

  while (true) {
    for (std::size_t mask = 1; mask < masks; ++mask)
      ids[mask] = join[std::size_t(ids[rest_mask[mask]]) * S + tuple[low_index[mask]]];
    key.fill(0);
    for (std::size_t mask = 0; mask < masks; ++mask) key[mask] = dim_of[ids[mask]];
    auto [it, fresh] = seen.emplace(key, out.generators.size());
    if (fresh) {
      RankVector h(out.ground);
      for (std::size_t mask = 0; mask < masks; ++mask)
        h.values()[mask] = Rational(std::uint32_t(key[mask]));
      out.generators.push_back(std::move(h));
      Arrangement src;
      src.field = f;
      src.ambient = dim;
      for (std::uint32_t i = 0; i < n; ++i) src.subspaces.push_back(spaces[tuple[i]]);
      out.sources.push_back(std::move(src));
    }
    // odometer, first index slowest
    std::size_t pos = n;
    bool done = true;
    while (pos-- > 0) {
      if (std::size_t(++tuple[pos]) < S) {
        done = false;
        break;
      }
      tuple[pos] = 0;
    }
    if (done) break;
  }
  return out;
}

void merge_generators(GeneratorSet& into, const GeneratorSet& more) {
  if (into.ground.n != more.ground.n)
    throw input_error("generator sets live on different ground sizes");
  for (std::size_t g = 0; g < more.generators.size(); ++g) {
    bool dup = false;
    for (const RankVector& have : into.generators)
      if (have.values() == more.generators[g].values()) {
        dup = true;
        break;
      }
    if (dup) continue;
    into.generators.push_back(more.generators[g]);
    if (g < more.sources.size()) into.sources.push_back(more.sources[g]);
  }
  into.tuples_scanned += more.tuples_scanned;
  into.subspace_count += more.subspace_count;
}

namespace {

// Phase-1 simplex with Bland's rule, exact rationals, revised form: keeps
// the basis inverse only. Feasibility of F c = b, c >= 0.
struct Phase1 {
  std::size_t rows, cols;               // constraint rows, generator columns
  const std::vector<std::vector<std::int64_t>>& F;  // column-major generator matrix
  std::vector<Rational> b;

  std::vector<std::size_t> basis;       // var id per row; >= cols means artificial i
  std::vector<std::vector<Rational>> binv;
  std::vector<Rational> x;              // basic values

  Phase1(std::size_t rows_, std::size_t cols_,
         const std::vector<std::vector<std::int64_t>>& F_, std::vector<Rational> b_)
      : rows(rows_), cols(cols_), F(F_), b(std::move(b_)) {
    basis.resize(rows);
    binv.assign(rows, std::vector<Rational>(rows, Rational(0)));
    x.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      basis[i] = cols + i;
      binv[i][i] = 1;
      x[i] = b[i];
    }
  }

  bool artificial(std::size_t var) const { return var >= cols; }

  // price vector y_i = sum of binv rows with artificial basic variables
  std::vector<Rational> prices() const {
    std::vector<Rational> y(rows, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
      if (artificial(basis[i]))
        for (std::size_t k = 0; k < rows; ++k) y[k] += binv[i][k];
    return y;
  }

  Rational objective() const {
    Rational w = 0;
    for (std::size_t i = 0; i < rows; ++i)
      if (artificial(basis[i])) w += x[i];
    return w;
  }

  std::vector<Rational> column(std::size_t var) const {
    std::vector<Rational> a(rows, Rational(0));
    if (artificial(var)) {
      a[var - cols] = 1;
    } else {
      for (std::size_t i = 0; i < rows; ++i) a[i] = Rational(F[var][i]);
    }
    return a;
  }

  void solve() {
    std::vector<bool> in_basis(cols + rows, false);
    for (std::size_t v : basis) in_basis[v] = true;
    while (true) {
      std::vector<Rational> y = prices();
      // entering: Bland — smallest var id with negative reduced cost
      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < cols + rows; ++j) {
        if (in_basis[j]) continue;
        Rational reduced;
        if (artificial(j)) {
          reduced = Rational(1) - y[j - cols];
        } else {
          Rational dot = 0;
          for (std::size_t i = 0; i < rows; ++i)
            if (F[j][i]) dot += y[i] * F[j][i];
          reduced = -dot;
        }
        if (reduced < 0) {
          enter = j;
          break;
        }
      }
      if (enter == SIZE_MAX) return;  // optimal

      std::vector<Rational> a = column(enter);
      std::vector<Rational> d(rows, Rational(0));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < rows; ++k)
          if (binv[i][k] != 0 && a[k] != 0) d[i] += binv[i][k] * a[k];

      // leaving: min ratio, ties by smallest basic var id (Bland)
      std::size_t leave = SIZE_MAX;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows; ++i) {
        if (d[i] <= 0) continue;
        Rational ratio = x[i] / d[i];
        if (leave == SIZE_MAX || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == SIZE_MAX)
        throw internal_error("phase-1 objective unbounded");  // cannot happen: w >= 0

      // pivot on (leave, enter)
      Rational piv = d[leave];
      for (std::size_t k = 0; k < rows; ++k) binv[leave][k] /= piv;
      x[leave] /= piv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == leave || d[i] == 0) continue;
        Rational factor = d[i];
        for (std::size_t k = 0; k < rows; ++k) binv[i][k] -= factor * binv[leave][k];
        x[i] -= factor * x[leave];
      }
      in_basis[basis[leave]] = false;
      in_basis[enter] = true;
      basis[leave] = enter;
    }
  }
};

}  // namespace

MembershipCertificate cone_member(const RankVector& h, const GeneratorSet& gens) {
  if (h.n() != gens.ground.n)
    throw input_error("cone membership needs matching ground sets");
  if (gens.generators.empty()) throw input_error("empty generator set");

  const std::size_t rows = h.values().size();
  const std::size_t cols = gens.generators.size();

  // column-major integer generator matrix
  std::vector<std::vector<std::int64_t>> F(cols, std::vector<std::int64_t>(rows, 0));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) {
      auto v = rat_to_int64(gens.generators[j].values()[i]);
      if (!v) throw input_error("generator ranks must be integers");
      F[j][i] = *v;
    }

  // sign-normalize rows so b >= 0 (rank vectors are nonnegative, but stay
  // safe for arbitrary query points)
  std::vector<Rational> b(h.values().begin(), h.values().end());
  std::vector<int> sign(rows, 1);
  for (std::size_t i = 0; i < rows; ++i)
    if (b[i] < 0) {
      sign[i] = -1;
      b[i] = -b[i];
      for (std::size_t j = 0; j < cols; ++j) F[j][i] = -F[j][i];
    }

  Phase1 lp(rows, cols, F, b);
  lp.solve();

  MembershipCertificate cert;
  if (lp.objective() == 0) {
    cert.member = true;
    std::vector<Rational> c(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
      if (!lp.artificial(lp.basis[i])) c[lp.basis[i]] = lp.x[i];
    for (std::size_t j = 0; j < cols; ++j)
      if (c[j] != 0) cert.coefficients.push_back({j, c[j]});
    // re-verify Σ c_j f_j = h entrywise
    for (std::size_t i = 0; i < rows; ++i) {
      Rational acc = 0;
      for (const auto& [j, cj] : cert.coefficients) acc += cj * gens.generators[j].values()[i];
      if (acc != h.values()[i])
        throw internal_error("membership certificate failed re-verification");
    }
    return cert;
  }

  // Farkas functional from the optimal phase-1 prices (undo row signs).
  std::vector<Rational> y = lp.prices();
  cert.member = false;
  cert.separating.assign(rows, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) cert.separating[i] = -y[i] * sign[i];
  // re-verify λ·f_j >= 0 for all generators and λ·h < 0
  for (std::size_t j = 0; j < cols; ++j) {
    Rational dot = 0;
    for (std::size_t i = 0; i < rows; ++i)
      dot += cert.separating[i] * gens.generators[j].values()[i];
    if (dot < 0) throw internal_error("separating functional failed on a generator");
  }
  Rational dot_h = 0;
  for (std::size_t i = 0; i < rows; ++i) dot_h += cert.separating[i] * h.values()[i];
  if (!(dot_h < 0)) throw internal_error("separating functional does not separate");
  return cert;
}

void save_generators(const std::string& dir, const GeneratorSet& gens) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  char name[32];
  for (std::size_t j = 0; j < gens.generators.size(); ++j) {
    std::snprintf(name, sizeof name, "gen%06zu.rankvec", j);
    save_rankvec((fs::path(dir) / name).string(), gens.generators[j]);
  }
  std::ofstream src(fs::path(dir) / "sources.txt");
  src << "generators " << gens.generators.size() << " tuples " << gens.tuples_scanned
      << " subspaces " << gens.subspace_count << "\n";
  for (std::size_t j = 0; j < gens.sources.size(); ++j) {
    src << "# generator " << j << "\n";
    write_arr(src, gens.sources[j]);
  }
}

GeneratorSet load_generators(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".rankvec") files.push_back(entry.path());
  if (files.empty()) throw input_error("no .rankvec files in " + dir);
  std::sort(files.begin(), files.end());
  GeneratorSet out;
  for (std::size_t j = 0; j < files.size(); ++j) {
    RankVector h = load_rankvec(files[j].string());
    if (j == 0) out.ground = h.ground();
    if (h.n() != out.ground.n) throw input_error("mixed ground sizes in " + dir);
    out.generators.push_back(std::move(h));
  }
  return out;
}

}  // namespace polymat
