// Independent test oracles. Everything here recomputes results from scratch
// with simpler algorithms (mod-p elimination, brute-force subset checks) and
// must stay decoupled from the library code paths it checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "polymat/lattice.hpp"
#include "polymat/represent.hpp"
#include "polymat/rng.hpp"

namespace oracle {

using polymat::Mask;
using polymat::RankVector;
using polymat::Rational;

// Rank of a list of vectors over the prime field GF(p), plain forward
// elimination (no RREF, no pivots bookkeeping shared with the library).
inline std::size_t prime_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t d = rows[0].size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t sel = SIZE_MAX;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] % p != 0) {
        sel = r;
        break;
      }
    if (sel == SIZE_MAX) continue;
    std::swap(rows[rank], rows[sel]);
    // normalize and eliminate below
    std::uint64_t inv = 1, base = rows[rank][col] % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t c = 0; c < d; ++c)
      rows[rank][c] = std::uint32_t(std::uint64_t(rows[rank][c]) * inv % p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      std::uint32_t f = rows[r][col] % p;
      if (!f) continue;
      for (std::size_t c = 0; c < d; ++c)
        rows[r][c] = std::uint32_t((rows[r][c] + std::uint64_t(p - f) * rows[rank][c]) % p);
    }
    ++rank;
    if (rank == rows.size()) break;
  }
  return rank;
}

// Naive per-subset rank vector of a prime-field arrangement: stack all basis
// rows of the subset's subspaces and eliminate, independently for every mask.
inline RankVector naive_rank_vector(const polymat::Arrangement& arr) {
  if (!arr.field.prime()) throw polymat::input_error("oracle handles prime fields only");
  const std::uint32_t p = arr.field.p();
  std::vector<std::vector<std::vector<std::uint32_t>>> gens;  // per subspace: basis rows
  for (const polymat::Subspace& s : arr.subspaces) {
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::uint32_t r = 0; r < s.dim(); ++r) rows.push_back(s.basis().row(r));
    gens.push_back(rows);
  }
  RankVector h(arr.ground());
  const std::size_t total = h.values().size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<std::vector<std::uint32_t>> stacked;
    for (std::uint32_t i = 0; i < arr.size(); ++i)
      if (mask >> i & 1)
        for (const auto& row : gens[i]) stacked.push_back(row);
    h.values()[mask] = Rational(std::uint64_t(prime_rank(stacked, p)));
  }
  return h;
}

// Full-definition polymatroid check: R1, R2 on all containments, R3 on all
// pairs.
inline bool full_polymatroid(const RankVector& h) {
  const std::size_t total = h.values().size();
  if (h.values()[0] != 0) return false;
  for (std::size_t b = 0; b < total; ++b) {
    for (std::size_t a = 0; a < total; ++a) {
      if ((a & b) == a && h.values()[a] > h.values()[b]) return false;  // R2: a ⊆ b
      if (h.values()[a | b] + h.values()[a & b] > h.values()[a] + h.values()[b]) return false;
    }
  }
  return true;
}

// Minimal dependent sets by definition: h(C) < |C| and every proper subset
// independent.
inline std::vector<Mask> brute_circuits(const RankVector& h) {
  const std::size_t total = h.values().size();
  std::vector<Mask> order;
  for (std::size_t m = 1; m < total; ++m) order.push_back(Mask(m));
  std::stable_sort(order.begin(), order.end(),
                   [](Mask a, Mask b) { return polymat::popcount(a) < polymat::popcount(b); });
  std::vector<Mask> out;
  for (Mask m : order) {
    if (h.values()[m] >= polymat::popcount(m)) continue;
    bool minimal = true;
    for (Mask s = (m - 1) & m; s; s = (s - 1) & m)
      if (h.values()[s] < polymat::popcount(s)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  return out;
}

// Separator criterion: disconnected iff some proper nonempty A has
// h(A) + h(X∖A) = h(X).
inline bool separator_connected(const RankVector& h) {
  const Mask full = h.full_mask();
  for (Mask a = 1; a < full; ++a)
    if (h.at(a) + h.at(full ^ a) == h.at(full)) return false;
  return true;
}

// Gaussian binomial [d choose r]_q as exact integer.
inline std::uint64_t gaussian_binomial(std::uint32_t d, std::uint32_t r, std::uint64_t q) {
  // product over i of (q^(d-i) - 1) / (q^(i+1) - 1); exact at these sizes
  __int128 num = 1, den = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    __int128 qp = 1;
    for (std::uint32_t k = 0; k < d - i; ++k) qp *= q;
    num *= qp - 1;
    qp = 1;
    for (std::uint32_t k = 0; k < i + 1; ++k) qp *= q;
    den *= qp - 1;
  }
  return std::uint64_t(num / den);
}

// Random subspace of GF(p)^d spanned by `vectors` uniform rows.
inline polymat::Subspace random_subspace(polymat::SplitMix& rng, const polymat::Field& f,
                                         std::uint32_t d, std::uint32_t vectors) {
  polymat::MatrixGF gen(f, vectors, d);
  for (std::uint32_t r = 0; r < vectors; ++r)
    for (std::uint32_t c = 0; c < d; ++c) gen.set(r, c, f.from_index(rng.below(f.order())));
  return polymat::Subspace::span(gen);
}

inline polymat::Arrangement random_arrangement(polymat::SplitMix& rng, const polymat::Field& f,
                                               std::uint32_t n, std::uint32_t d) {
  polymat::Arrangement arr;
  arr.field = f;
  arr.ambient = d;
  for (std::uint32_t i = 0; i < n; ++i)
    arr.subspaces.push_back(random_subspace(rng, f, d, std::uint32_t(rng.below(d + 1))));
  return arr;
}

}  // namespace oracle
