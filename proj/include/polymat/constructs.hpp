#pragma once

#include <array>
#include <string>
#include <vector>

#include "polymat/inequality.hpp"
#include "polymat/represent.hpp"

namespace polymat {

/// Seven rank-1 subspaces of a 3-dim space: Y1..Y3 the coordinate axes, then
/// W1 = ⟨u1+u2⟩, W2 = ⟨u2+u3⟩, W3 = ⟨u1+u2+u3⟩, W4 = ⟨u1+u3⟩. Over a field of
/// characteristic 2 this realizes the Fano matroid; the ground-set order is
/// fixed so golden rank-vector files stay stable.
Arrangement fano_arrangement(const Field& f);

/// Thirteen rank-1 subspaces of a 5-dim space: Z1..Z5 the axes, then
/// V1 = ⟨u1+u2+u3⟩, V2 = ⟨u3+u4+u5⟩, V3 = ⟨u1+u2⟩, V4 = ⟨u1+u3⟩,
/// V5 = ⟨u2+u3⟩, V6 = ⟨u3+u4⟩, V7 = ⟨u3+u5⟩, V8 = ⟨u4+u5⟩. The intended
/// equalities need odd characteristic.
Arrangement dfz_arrangement(const Field& f);

/// g(A) = min(h(A), h(full) − ε) entrywise, 0 ≤ ε ≤ h(full).
RankVector epsilon_perturb(const RankVector& h, const Rational& eps);

/// Rank function on the disjoint union: Φ(A) = h1(A ∩ X1) + h2(A ∩ X2),
/// X1 = low bits, X2 = high bits.
RankVector direct_sum(const RankVector& h1, const RankVector& h2);

/// direct_sum of the two constructions' rank vectors (20 elements).
RankVector phi_base(const Field& fano_field, const Field& dfz_field);

/// epsilon_perturb(phi_base, ε) for 0 < ε ≤ min of the two block ranks (3 for
/// the default fields). Restrictions to either block reproduce the block's
/// own rank vector exactly; checked on every call.
RankVector phi_perturbed(const Rational& eps, const Field& fano_field, const Field& dfz_field);

/// One named equality: holds on h iff the expression evaluates to 0.
struct RankEquality {
  std::string name;
  LinearRankExpr expr;
  bool holds(const RankVector& h) const { return eval_expr(h, expr) == 0; }
};

/// The 1+7 equalities of the 7-element construction: joint independence of
/// Y1..Y3 plus seven conditional-rank zeros (H(W4|W1W2)=0 is the
/// characteristic-2 one).
std::vector<RankEquality> fano_equalities();

/// The 1+15 equalities of the 13-element construction (H(Z3|V3..V8)=0 is the
/// odd-characteristic one).
std::vector<RankEquality> dfz_equalities();

/// Which case of the perturbation argument covers a quadruple: classifies by
/// Q ∩ U, where U indexes the five positive terms of J and Q collects index
/// sets whose rank reaches h(full) − ε. The verified chain of inequalities
/// for the classified case is re-checked numerically; a failure (which would
/// mean the analysis is not exhaustive) throws internal_error.
struct PerturbationCaseReport {
  int case_number = 0;                                // 1..7
  std::vector<std::pair<int, int>> biting_pairs;      // Q ∩ U, 0-based indices
  Rational score_after;                               // J on the perturbed vector
};

PerturbationCaseReport perturbation_case(const RankVector& h, const Rational& eps,
                                         const std::array<Mask, 4>& quad);

}  // namespace polymat
