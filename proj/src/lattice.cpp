#include "polymat/lattice.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace polymat {

GroundSet::GroundSet(std::uint32_t n_, std::vector<std::string> labels_)
    : n(n_), labels(std::move(labels_)) {
  if (n < 1) throw input_error("ground set needs at least one element");
  if (n > 24) throw size_error("ground set capped at 24 elements, got " + std::to_string(n));
  if (!labels.empty()) {
    if (labels.size() != n) throw input_error("label count does not match element count");
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (uniq.size() != labels.size()) throw input_error("labels must be distinct");
  }
}

std::string GroundSet::label(std::uint32_t i) const {
  if (i >= n) throw input_error("element index out of range");
  if (!labels.empty()) return labels[i];
  return "e" + std::to_string(i);
}

RankVector::RankVector(GroundSet g) : ground_(std::move(g)), values_(ground_.subset_count(), Rational(0)) {}

void RankVector::check_mask(Mask a) const {
  if (a >= values_.size()) {
    std::ostringstream os;
    os << "subset mask 0x" << std::hex << a << " out of range for n=" << std::dec << ground_.n;
    throw input_error(os.str());
  }
}

const Rational& RankVector::at(Mask a) const {
  check_mask(a);
  return values_[a];
}

void RankVector::set(Mask a, Rational v) {
  check_mask(a);
  values_[a] = std::move(v);
}

Rational rank(const RankVector& h, Mask a) { return h.at(a); }

Rational cond_entropy(const RankVector& h, Mask a, Mask c) {
  h.check_mask(a);
  h.check_mask(c);
  return h.at(a | c) - h.at(c);
}

Rational mutual_info(const RankVector& h, Mask a, Mask b, Mask c) {
  h.check_mask(a);
  h.check_mask(b);
  h.check_mask(c);
  return h.at(a | c) + h.at(b | c) - h.at(c) - h.at(a | b | c);
}

RankVector scale(const RankVector& h, const Rational& c) {
  if (c < 0) throw input_error("scale factor must be nonnegative");
  RankVector r(h.ground());
  for (std::size_t i = 0; i < h.values().size(); ++i) r.values()[i] = h.values()[i] * c;
  return r;
}

RankVector induce(const RankVector& h, const std::vector<Mask>& parts,
                  std::vector<std::string> labels) {
  if (parts.empty()) throw input_error("induce needs at least one subset");
  if (parts.size() > 24) throw size_error("induced ground set capped at 24 elements");
  for (Mask p : parts) h.check_mask(p);
  RankVector r(GroundSet(std::uint32_t(parts.size()), std::move(labels)));
  const std::size_t total = r.ground().subset_count();
  for (std::size_t alpha = 0; alpha < total; ++alpha) {
    Mask u = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (alpha >> i & 1) u |= parts[i];
    r.values()[alpha] = h.at(u);
  }
  return r;
}

void write_rankvec(std::ostream& os, const RankVector& h) {
  os << "rankvec " << h.n() << "\n";
  for (std::size_t mask = 0; mask < h.values().size(); ++mask) {
    os << std::hex << mask << std::dec << " " << rat_str(h.values()[mask]) << "\n";
  }
}

RankVector read_rankvec(std::istream& is) {
  std::string word;
  if (!(is >> word) || word != "rankvec") throw input_error("not a rankvec v1 file");
  std::uint32_t n = 0;
  if (!(is >> n)) throw input_error("rankvec header missing element count");
  RankVector h{GroundSet(n)};
  std::string mask_hex, value;
  while (is >> mask_hex >> value) {
    Mask mask = 0;
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(mask_hex, &pos, 16);
      if (pos != mask_hex.size()) throw input_error("bad mask: " + mask_hex);
      mask = Mask(v);
    } catch (const std::logic_error&) {
      throw input_error("bad mask: " + mask_hex);
    }
    h.check_mask(mask);
    h.set(mask, rat_parse(value));
  }
  return h;
}

void save_rankvec(const std::string& path, const RankVector& h) {
  std::ofstream os(path);
  if (!os) throw input_error("cannot write " + path);
  write_rankvec(os, h);
}

RankVector load_rankvec(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw input_error("cannot read " + path);
  return read_rankvec(is);
}

std::optional<ScaledInt64> to_scaled_int64(const RankVector& h) {
  // Scale by the lcm of the denominators; bail out unless everything stays
  // far from the int64 edge (sums of 10 terms must not overflow).
  mpz_class lcm_den = 1;
  for (const Rational& q : h.values()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  if (!lcm_den.fits_slong_p()) return std::nullopt;
  ScaledInt64 out;
  out.denom = static_cast<std::int64_t>(lcm_den.get_si());
  if (out.denom <= 0) return std::nullopt;
  const mpz_class limit = mpz_class(1) << 57;
  out.v.reserve(h.values().size());
  for (const Rational& q : h.values()) {
    mpz_class scaled = q.get_num() * (lcm_den / q.get_den());
    if (cmp(abs(scaled), limit) > 0) return std::nullopt;
    out.v.push_back(static_cast<std::int64_t>(scaled.get_si()));
  }
  return out;
}

}  // namespace polymat
