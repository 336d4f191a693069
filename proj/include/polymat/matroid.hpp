#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polymat/inequality.hpp"
#include "polymat/lattice.hpp"

namespace polymat {

/// Integral ranks bounded by cardinality. Requires a polymatroid input
/// (throws input_error otherwise).
bool is_matroid(const RankVector& h);

/// All minimal dependent sets (h(C) < |C|, every proper subset independent),
/// ascending by cardinality then mask value.
std::vector<Mask> circuits(const RankVector& h);

/// Every pair of elements shares a circuit. Literal pairwise test over the
/// circuit list; the separator criterion is kept as an oracle in the tests.
bool is_connected(const RankVector& h);

/// One failed predicate from the equality set of a matroid.
struct EqualityViolation {
  enum class Kind { cond_entropy_zero, mutual_info_zero } kind;
  Mask a = 0, b = 0;
  std::string describe(const GroundSet& g) const;
};

/// Streams all 4^n ordered pairs (A, B) — B outer, A inner, both ascending,
/// the H(A|B)=0 predicate before I(A;B)=0 — without materializing the
/// equality set. Returns the first predicate that holds in `m` but not in
/// `g`, or nullopt when g satisfies every equality of m.
std::optional<EqualityViolation> equality_set_check(const RankVector& m, const RankVector& g);

/// For connected matroid m and polymatroid g satisfying m's equality set:
/// g = c·m. Returns c = g(first element)/m(first element) and re-verifies the
/// identity entrywise; a mismatch (impossible for valid inputs) throws
/// verification_error naming the counterexample subset.
Rational proportionality(const RankVector& m, const RankVector& g);

}  // namespace polymat
