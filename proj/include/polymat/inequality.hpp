#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polymat/lattice.hpp"

namespace polymat {

enum class Axiom { normalization, monotonicity, submodularity };

struct AxiomViolation {
  Axiom axiom;
  // monotonicity: element i. submodularity: pair (i, j) conditioned on k_mask.
  std::uint32_t i = 0, j = 0;
  Mask k_mask = 0;
  std::string describe() const;
};

/// Elemental polymatroid check: h(∅) = 0, h(full) − h(full∖i) ≥ 0 for each i,
/// and submodularity on pairs {i,j} given every K ⊆ X∖{i,j}. Equivalent to the
/// full axiom set; the full-definition oracle lives in the test suite.
/// Returns the first violation in scan order (normalization, then
/// monotonicity by i, then submodularity by (i, j, K ascending)).
std::optional<AxiomViolation> polymatroid_violation(const RankVector& h);

inline bool is_polymatroid(const RankVector& h) { return !polymatroid_violation(h).has_value(); }

/// Σ terms of coefficient × h(union of the term's subsets).
struct LinearRankExpr {
  struct Term {
    Rational coeff;
    std::vector<Mask> sets;
  };
  std::vector<Term> terms;
};

Rational eval_expr(const RankVector& h, const LinearRankExpr& e);

/// J(A1,A2,A3,A4) = h(A1A2)+h(A1A3)+h(A1A4)+h(A2A3)+h(A2A4)
///                − h(A1) − h(A2) − h(A3A4) − h(A1A2A3) − h(A1A2A4).
/// Symmetric under A1↔A2 and A3↔A4.
Rational ingleton_score(const RankVector& h, Mask a1, Mask a2, Mask a3, Mask a4);

enum class ScanMode { exhaustive, sampled };

struct ScanOptions {
  ScanMode mode = ScanMode::exhaustive;
  std::uint64_t trials = 1000000;  // sampled mode
  std::uint64_t seed = 1;          // sampled mode
  unsigned threads = 0;            // 0 = hardware concurrency
};

struct IngletonReport {
  Rational min_score;
  std::array<Mask, 4> argmin{};
  std::uint64_t quadruples_checked = 0;
  ScanMode mode = ScanMode::exhaustive;
};

/// Exhaustive mode walks a1 ≤ a2, a3 ≤ a4 (the two swap symmetries), masks
/// ascending; needs n ≤ 7. Sampled mode draws seeded uniform quadruples from
/// the splitmix64 counter stream, reproducible per seed and independent of
/// the thread count.
IngletonReport ingleton_scan(const RankVector& h, const ScanOptions& opts);

/// min over numerator subsets of h divided by max over denominator subsets.
Rational dfz_ratio(const RankVector& h, const std::vector<Mask>& numerators,
                   const std::vector<Mask>& denominators);

}  // namespace polymat
