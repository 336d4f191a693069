#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polymat/common.hpp"
#include "polymat/rational.hpp"

namespace polymat {

/// Subset of the ground set as a bitmask; bit i set means element i is in.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline int lowest_bit(Mask m) { return __builtin_ctz(m); }

struct GroundSet {
  std::uint32_t n = 0;
  std::vector<std::string> labels;  // empty, or n distinct strings

  GroundSet() = default;
  explicit GroundSet(std::uint32_t n_, std::vector<std::string> labels_ = {});

  Mask full() const { return n == 0 ? 0 : (Mask(1) << n) - 1; }
  std::size_t subset_count() const { return std::size_t(1) << n; }
  std::string label(std::uint32_t i) const;
};

/// Exact rank value for every subset of the ground set: a point in
/// R^(2^n), stored densely, indexed by mask. Subset iteration order is
/// ascending mask value throughout, so scan argmins are deterministic.
/// Treated as immutable once built; safe to share across scan workers.
class RankVector {
 public:
  RankVector() = default;
  explicit RankVector(GroundSet g);

  const GroundSet& ground() const { return ground_; }
  std::uint32_t n() const { return ground_.n; }
  Mask full_mask() const { return ground_.full(); }

  const Rational& at(Mask a) const;
  void set(Mask a, Rational v);

  const std::vector<Rational>& values() const { return values_; }
  std::vector<Rational>& values() { return values_; }

  void check_mask(Mask a) const;

  bool operator==(const RankVector& o) const {
    return ground_.n == o.ground_.n && values_ == o.values_;
  }

 private:
  GroundSet ground_;
  std::vector<Rational> values_;
};

Rational rank(const RankVector& h, Mask a);

/// H(A | C) = h(A ∪ C) - h(C).
Rational cond_entropy(const RankVector& h, Mask a, Mask c);

/// I(A; B | C) = h(AC) + h(BC) - h(C) - h(ABC). C defaults to the empty set.
Rational mutual_info(const RankVector& h, Mask a, Mask b, Mask c = 0);

/// Every entry multiplied by c >= 0, exactly.
RankVector scale(const RankVector& h, const Rational& c);

/// Rank vector on |parts| elements with value h(union of parts[i], i in α).
RankVector induce(const RankVector& h, const std::vector<Mask>& parts,
                  std::vector<std::string> labels = {});

/// Text format "rankvec v1". Header "rankvec <n>", then "<mask-hex> <num>/<den>"
/// lines; masks absent from a file read as 0. The writer emits all 2^n entries
/// in ascending mask order.
void write_rankvec(std::ostream& os, const RankVector& h);
RankVector read_rankvec(std::istream& is);
void save_rankvec(const std::string& path, const RankVector& h);
RankVector load_rankvec(const std::string& path);

/// Integer view for scan fast paths: values[i] = v[i] / denom exactly.
/// Empty when scaling would not fit comfortably in 64 bits.
struct ScaledInt64 {
  std::vector<std::int64_t> v;
  std::int64_t denom = 1;
};
std::optional<ScaledInt64> to_scaled_int64(const RankVector& h);

}  // namespace polymat
