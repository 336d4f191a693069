#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polymat/lattice.hpp"
#include "polymat/represent.hpp"

namespace polymat {

/// Deduplicated rank vectors of all n-tuples of subspaces of GF(q)^d, each
/// tagged with the first tuple that produced it.
struct GeneratorSet {
  GroundSet ground;
  std::vector<RankVector> generators;
  std::vector<Arrangement> sources;     // parallel to generators; may be empty after load
  std::uint64_t tuples_scanned = 0;     // (#subspaces)^n
  std::uint64_t subspace_count = 0;
};

/// All subspaces of the ambient space, every dimension, deterministic order
/// (dimension, then pivot columns, then free entries).
std::vector<Subspace> all_subspaces(const Field& f, std::uint32_t ambient);

/// Bounds: n ≤ 4 and d ≤ 4 (the subspace count grows fast with q and d).
GeneratorSet enumerate_generators(std::uint32_t n, const Field& f, std::uint32_t dim);

/// Dedup-union of two generator sets over the same ground size.
void merge_generators(GeneratorSet& into, const GeneratorSet& more);

/// Either nonnegative coefficients with Σ c_j f_j = h, or a separating
/// functional λ with λ·f_j ≥ 0 for every generator and λ·h < 0. Both kinds
/// are re-verified in exact arithmetic before being returned. A non-member
/// verdict is relative to the supplied finite generator set.
struct MembershipCertificate {
  bool member = false;
  std::vector<std::pair<std::size_t, Rational>> coefficients;  // (generator index, c_j > 0)
  std::vector<Rational> separating;                            // 2^n functional entries
};

MembershipCertificate cone_member(const RankVector& h, const GeneratorSet& gens);

/// Directory layout: gen<index>.rankvec files (index order = generator order)
/// plus a sources.txt provenance listing.
void save_generators(const std::string& dir, const GeneratorSet& gens);
GeneratorSet load_generators(const std::string& dir);

}  // namespace polymat
