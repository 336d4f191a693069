#include "polymat/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polymat {

bool is_matroid(const RankVector& h) {
  if (!is_polymatroid(h)) throw input_error("is_matroid needs a polymatroid input");
  for (std::size_t mask = 0; mask < h.values().size(); ++mask) {
    const Rational& v = h.values()[mask];
    if (v.get_den() != 1) return false;
    if (v > popcount(Mask(mask))) return false;
  }
  return true;
}

std::vector<Mask> circuits(const RankVector& h) {
  if (!is_matroid(h)) throw input_error("circuits need a matroid input");
  const std::size_t total = h.values().size();

  // int ranks; is_matroid guarantees integrality
  std::vector<std::int64_t> r(total);
  for (std::size_t mask = 0; mask < total; ++mask) r[mask] = h.values()[mask].get_num().get_si();

  // masks in (cardinality, value) order
  std::vector<Mask> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [](Mask a, Mask b) { return popcount(a) < popcount(b); });

  std::vector<Mask> found;
  for (Mask mask : order) {
    if (mask == 0) continue;
    if (r[mask] >= popcount(mask)) continue;  // independent
    bool minimal = true;
    for (Mask c : found) {
      if ((mask & c) == c && c != mask) {
        minimal = false;
        break;
      }
    }
    if (minimal) found.push_back(mask);
  }
  return found;
}

bool is_connected(const RankVector& h) {
  const std::uint32_t n = h.n();
  std::vector<Mask> cs = circuits(h);
  if (n == 1) return true;  // no pairs to separate
  // pair (i, j) covered when some circuit contains both
  std::vector<bool> covered(std::size_t(n) * n, false);
  for (Mask c : cs) {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!(c >> i & 1)) continue;
      for (std::uint32_t j = i + 1; j < n; ++j)
        if (c >> j & 1) covered[std::size_t(i) * n + j] = true;
    }
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (!covered[std::size_t(i) * n + j]) return false;
  return true;
}

std::string EqualityViolation::describe(const GroundSet& g) const {
  auto set_str = [&](Mask m) {
    std::string s = "{";
    bool first = true;
    for (std::uint32_t i = 0; i < g.n; ++i)
      if (m >> i & 1) {
        if (!first) s += ",";
        s += g.label(i);
        first = false;
      }
    return s + "}";
  };
  std::ostringstream os;
  if (kind == Kind::cond_entropy_zero)
    os << "H(" << set_str(a) << "|" << set_str(b) << ")=0";
  else
    os << "I(" << set_str(a) << ";" << set_str(b) << ")=0";
  return os.str();
}

namespace {

template <class Vec>
std::optional<EqualityViolation> stream_pairs(const Vec& vm, const Vec& vg, std::size_t total) {
  using V = EqualityViolation;
  for (std::size_t b = 0; b < total; ++b) {
    for (std::size_t a = 0; a < total; ++a) {
      // H(A|B) = h(A∪B) − h(B)
      if (vm[a | b] == vm[b] && !(vg[a | b] == vg[b]))
        return V{V::Kind::cond_entropy_zero, Mask(a), Mask(b)};
      // I(A;B) = h(A) + h(B) − h(A∪B)
      if (vm[a] + vm[b] == vm[a | b] && !(vg[a] + vg[b] == vg[a | b]))
        return V{V::Kind::mutual_info_zero, Mask(a), Mask(b)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<EqualityViolation> equality_set_check(const RankVector& m, const RankVector& g) {
  if (m.n() != g.n()) throw input_error("equality check needs matching ground sets");
  if (!is_matroid(m)) throw input_error("equality set is defined for a matroid source");
  const std::size_t total = m.values().size();
  auto fm = to_scaled_int64(m);
  auto fg = to_scaled_int64(g);
  if (fm && fg) return stream_pairs(fm->v, fg->v, total);  // zero-ness survives scaling
  return stream_pairs(m.values(), g.values(), total);
}

Rational proportionality(const RankVector& m, const RankVector& g) {
  if (m.n() != g.n()) throw input_error("proportionality needs matching ground sets");
  if (!is_connected(m)) throw input_error("proportionality needs a connected matroid");
  if (auto bad = equality_set_check(m, g))
    throw input_error("g violates the matroid's equality set: " + bad->describe(m.ground()));

  const Rational& m1 = m.at(1);
  Rational c = m1 == 0 ? Rational(0) : g.at(1) / m1;
  for (std::size_t mask = 0; mask < m.values().size(); ++mask) {
    if (g.values()[mask] != c * m.values()[mask]) {
      std::ostringstream os;
      os << "proportionality failed at subset 0x" << std::hex << mask
         << " (would contradict the connected-matroid lemma; input is corrupt)";
      throw verification_error(os.str());
    }
  }
  return c;
}

}  // namespace polymat
