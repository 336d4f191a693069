#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polymat/common.hpp"

namespace polymat {

/// A field element of GF(p^m): m coefficients in [0, p), constant term first.
using FElem = std::vector<std::uint32_t>;

bool is_prime_u32(std::uint32_t n);

/// GF(p^m) with a fixed monic irreducible modulus of degree m over GF(p).
///
/// Field::make picks the modulus deterministically: the irreducible whose
/// coefficient value sum(c_i * p^i) is smallest. m = 1 uses modulus x, so
/// elements are residues mod p. Two Field values compare equal iff p, m and
/// modulus all match; every downstream output is reproducible bit for bit.
class Field {
 public:
  Field() = default;

  static Field make(std::uint32_t p, std::uint32_t m);

  /// Parses "GF(p)" or "GF(p^m)".
  static Field parse(const std::string& literal);
  std::string literal() const;

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  bool prime() const { return m_ == 1; }
  /// p^m; throws size_error beyond 2^62.
  std::uint64_t order() const;

  /// Modulus coefficients c0..cm (monic, cm = 1). {0,1} for m = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FElem zero() const { return FElem(m_, 0); }
  FElem one() const;
  bool is_zero(const FElem& a) const;

  FElem add(const FElem& a, const FElem& b) const;
  FElem sub(const FElem& a, const FElem& b) const;
  FElem neg(const FElem& a) const;
  FElem mul(const FElem& a, const FElem& b) const;
  /// Throws input_error on inv(0).
  FElem inv(const FElem& a) const;

  /// Element index sum(c_i * p^i); the scan order used everywhere.
  std::uint64_t index(const FElem& a) const;
  FElem from_index(std::uint64_t idx) const;

  /// Constant-polynomial image of an element of the prime field GF(p).
  /// Ring homomorphism. Source must be prime with the same characteristic.
  FElem embed_from_prime(const Field& source, const FElem& e) const;

  /// "[c0,c1,...]"
  std::string elem_str(const FElem& a) const;
  FElem elem_parse(const std::string& text) const;

  /// Validates coefficient count and ranges; throws input_error.
  void check_elem(const FElem& a) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  std::uint32_t p_ = 2;
  std::uint32_t m_ = 1;
  std::vector<std::uint32_t> modulus_ = {0, 1};
};

}  // namespace polymat
