#include <doctest.h>

#include "polymat/gf.hpp"
#include "polymat/rng.hpp"

using namespace polymat;

namespace {

// Independent irreducibility check: trial division by every monic polynomial
// of degree 1..m/2.
bool divides(const std::vector<std::uint32_t>& div, std::vector<std::uint32_t> num,
             std::uint32_t p) {
  auto inv = [&](std::uint32_t a) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return std::uint32_t(r);
  };
  std::uint32_t lead_inv = inv(div.back());
  while (num.size() >= div.size()) {
    std::uint32_t c = std::uint32_t(std::uint64_t(num.back()) * lead_inv % p);
    std::size_t shift = num.size() - div.size();
    for (std::size_t i = 0; i < div.size(); ++i)
      num[shift + i] =
          std::uint32_t((num[shift + i] + std::uint64_t(p - 1) * c % p * div[i]) % p);
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num.empty()) return true;
  }
  return false;
}

bool trial_division_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t deg = 1; deg <= m / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<std::uint32_t> div(deg + 1, 0);
      std::uint64_t t = v;
      for (std::size_t i = 0; i < deg; ++i) {
        div[i] = std::uint32_t(t % p);
        t /= p;
      }
      div[deg] = 1;
      if (divides(div, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("primality by trial division") {
  CHECK(is_prime_u32(2));
  CHECK(is_prime_u32(3));
  CHECK(is_prime_u32(2147483647));  // 2^31 - 1
  CHECK_FALSE(is_prime_u32(1));
  CHECK_FALSE(is_prime_u32(91));
  CHECK_THROWS_AS(Field::make(4, 1), input_error);
}

TEST_CASE("field_make picks the canonical modulus") {
  CHECK(Field::make(2, 1).modulus() == std::vector<std::uint32_t>{0, 1});
  // x^2 + x + 1 is the only irreducible quadratic over GF(2)
  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(3, 1).p() == 3);
  CHECK(Field::make(3, 1).order() == 3);
  CHECK(Field::make(2, 3).order() == 8);
}

TEST_CASE("moduli survive an independent irreducibility check") {
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 2}, {2, 3}, {2, 4}, {2, 6},
                      {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    Field f = Field::make(p, m);
    CHECK(trial_division_irreducible(f.modulus(), p));
  }
}

TEST_CASE("GF(4) multiplication reduces mod x^2+x+1") {
  Field f = Field::make(2, 2);
  FElem x = {0, 1};
  CHECK(f.mul(x, x) == FElem{1, 1});  // x*x = x+1
}

TEST_CASE("GF(3) inverse") {
  Field f = Field::make(3, 1);
  CHECK(f.inv({2}) == FElem{2});  // 2*2 = 4 = 1
  CHECK_THROWS_AS(f.inv({0}), input_error);
}

TEST_CASE("field axioms hold on random triples") {
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    Field f = Field::make(p, m);
    SplitMix rng(7 * p + m);
    for (int trial = 0; trial < 300; ++trial) {
      FElem a = f.from_index(rng.below(f.order()));
      FElem b = f.from_index(rng.below(f.order()));
      FElem c = f.from_index(rng.below(f.order()));
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.is_zero(f.add(a, f.neg(a))));
      if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
  }
}

TEST_CASE("prime-subfield embedding is a ring homomorphism") {
  Field gf2 = Field::make(2, 1);
  Field gf8 = Field::make(2, 3);
  CHECK(gf8.embed_from_prime(gf2, {1}) == gf8.one());
  Field gf3 = Field::make(3, 1);
  Field gf9 = Field::make(3, 2);
  CHECK(gf9.embed_from_prime(gf3, {2}) == FElem{2, 0});
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b) {
      FElem ea = gf8.embed_from_prime(gf2, {a});
      FElem eb = gf8.embed_from_prime(gf2, {b});
      CHECK(gf8.add(ea, eb) == gf8.embed_from_prime(gf2, gf2.add({a}, {b})));
      CHECK(gf8.mul(ea, eb) == gf8.embed_from_prime(gf2, gf2.mul({a}, {b})));
    }
  CHECK_THROWS_AS(gf8.embed_from_prime(Field::make(2, 2), {0, 1}), unsupported_error);
  CHECK_THROWS_AS(gf9.embed_from_prime(gf2, {1}), input_error);
}

TEST_CASE("field literals round-trip") {
  CHECK(Field::parse("GF(2)") == Field::make(2, 1));
  CHECK(Field::parse("GF(3^2)") == Field::make(3, 2));
  CHECK(Field::parse(Field::make(2, 4).literal()) == Field::make(2, 4));
  CHECK_THROWS_AS(Field::parse("GF(six)"), input_error);
  Field f = Field::make(3, 2);
  CHECK(f.elem_parse("[1,2]") == FElem{1, 2});
  CHECK(f.elem_str({2, 1}) == "[2,1]");
  CHECK_THROWS_AS(f.elem_parse("[3,0]"), input_error);
  CHECK_THROWS_AS(f.elem_parse("[1]"), input_error);
}

TEST_CASE("element ops validate their inputs") {
  Field f = Field::make(2, 2);
  CHECK_THROWS_AS(f.add({1}, {0, 1}), input_error);
  CHECK_THROWS_AS(f.check_elem({2, 0}), input_error);
}
