#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polymat/lattice.hpp"
#include "polymat/linalg.hpp"

namespace polymat {

/// Ordered list of subspaces sharing one ambient space and field. Induces the
/// rank vector h(α) = dim⟨V_i, i ∈ α⟩.
struct Arrangement {
  Field field;
  std::uint32_t ambient = 0;
  std::vector<Subspace> subspaces;
  std::vector<std::string> labels;  // empty, or one per subspace

  std::uint32_t size() const { return std::uint32_t(subspaces.size()); }
  void validate() const;
  GroundSet ground() const { return GroundSet(size(), labels); }
};

/// Span of ⟨V_i, i ∈ α⟩ for every subset mask, built incrementally: the span
/// at α extends the span at α minus its lowest element. 2^n entries.
std::vector<Subspace> subset_spans(const Arrangement& arr);

RankVector rank_vector(const Arrangement& arr);

/// Same subspaces over GF(p^m) (absolute degree m over the prime base).
/// Ranks are unchanged: the basis vectors keep prime-subfield entries, so
/// elimination never leaves the subfield. Requires a prime base field.
Arrangement lift(const Arrangement& arr, std::uint32_t degree);

struct ExternalVector {
  std::uint32_t degree = 1;  // extension degree actually used
  Arrangement lifted;        // arr when degree == 1
  RowGF vector_;             // in the span of all subspaces, outside every deficient flat
};

/// Finds u ∈ ⟨V_i, all i⟩ lying outside every deficient flat ⟨V_α⟩ (a span
/// with 1 ≤ dim < rank(full)). Tries the smallest degree with
/// field_order^degree > |distinct deficient flats| first, then increments;
/// candidates are scanned in lexicographic span-coordinate order, so the
/// result is deterministic.
ExternalVector find_external_vector(const Arrangement& arr);

/// k rounds of: find an external vector u, project every subspace away from
/// ⟨u⟩. The result's rank vector equals min(h(α), h(full) − k) entrywise;
/// this is re-verified on every call before returning.
Arrangement integer_perturb(const Arrangement& arr, std::uint32_t k);

/// Projects everything away from a subspace A ⊆ V_c chosen so that A
/// complements ⟨V_α⟩ inside ⟨V_c, V_α⟩. Afterwards H(c | α) = 0 and
/// dim A equals the old H(c | α); both are re-verified.
Arrangement fix_conditional(const Arrangement& arr, std::uint32_t c_index, Mask alpha);

/// Projects everything away from A = Σ_{i∈β} (V_i ∩ ⟨V_j, j ∈ β∖i⟩). The β
/// subspaces become mutually independent with dims H(V_j | V_{β∖j}); the three
/// defining identities are re-verified.
Arrangement fix_independence(const Arrangement& arr, Mask beta);

/// Text format "arr v1": header "arr <field> <ambient> <k>", then per subspace
/// "subspace <name> <rows>" followed by rows of element literals.
void write_arr(std::ostream& os, const Arrangement& arr);
Arrangement read_arr(std::istream& is);
void save_arr(const std::string& path, const Arrangement& arr);
Arrangement load_arr(const std::string& path);

}  // namespace polymat
