#include "polymat/gf.hpp"

#include <algorithm>
#include <sstream>

namespace polymat {

namespace {

std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return s >= p ? std::uint32_t(s - p) : std::uint32_t(s);
}
std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return std::uint32_t((std::uint64_t(a) * b) % p);
}
std::uint32_t powm(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}
std::uint32_t invm(std::uint32_t a, std::uint32_t p) {
  // p prime
  return powm(a % p, p - 2, p);
}

// Dense polynomials over GF(p), constant term first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void ptrim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
int pdeg(const Poly& f) { return int(f.size()) - 1; }  // deg(0) = -1

Poly psub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = subm(x, y, p);
  }
  ptrim(r);
  return r;
}

Poly pmul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
  }
  ptrim(r);
  return r;
}

// Remainder of a modulo g (g != 0).
Poly pmod(Poly a, const Poly& g, std::uint32_t p) {
  std::uint32_t lead_inv = invm(g.back(), p);
  while (pdeg(a) >= pdeg(g)) {
    std::uint32_t c = mulm(a.back(), lead_inv, p);
    std::size_t shift = a.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      a[shift + i] = subm(a[shift + i], mulm(c, g[i], p), p);
    ptrim(a);
  }
  return a;
}

Poly pgcd(Poly a, Poly b, std::uint32_t p) {
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint32_t c = invm(a.back(), p);
    for (auto& x : a) x = mulm(x, c, p);
  }
  return a;
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& g, std::uint32_t p) {
  Poly r = {1};
  base = pmod(std::move(base), g, p);
  while (e) {
    if (e & 1) r = pmod(pmul(r, base, p), g, p);
    base = pmod(pmul(base, base, p), g, p);
    e >>= 1;
  }
  return r;
}

// Complete test for monic f of degree m >= 1: f is reducible iff it has an
// irreducible factor of degree k <= m/2, iff gcd(x^(p^k) - x, f) != 1 for some
// such k.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  int m = pdeg(f);
  if (m <= 0) return false;
  if (m == 1) return true;
  Poly t = {0, 1};  // x
  for (int k = 1; k <= m / 2; ++k) {
    t = ppowmod(std::move(t), p, f, p);  // now x^(p^k) mod f
    Poly g = pgcd(psub(t, Poly{0, 1}, p), f, p);
    if (pdeg(g) != 0) return false;
  }
  return true;
}

// Extended Euclid in GF(p)[x]: returns (g, s) with s*a + t*f = g, g monic.
std::pair<Poly, Poly> pxgcd(Poly a, Poly f, std::uint32_t p) {
  Poly s0 = {1}, s1 = {};
  while (!f.empty()) {
    // divide a by f: quotient q
    Poly q;
    {
      Poly r = a;
      std::uint32_t li = invm(f.back(), p);
      q.assign(r.size() > f.size() ? r.size() - f.size() + 1 : 1, 0);
      while (pdeg(r) >= pdeg(f)) {
        std::uint32_t c = mulm(r.back(), li, p);
        std::size_t shift = r.size() - f.size();
        q[shift] = c;
        for (std::size_t i = 0; i < f.size(); ++i)
          r[shift + i] = subm(r[shift + i], mulm(c, f[i], p), p);
        ptrim(r);
      }
      ptrim(q);
      a.swap(f);
      f = std::move(r);
    }
    Poly ns = psub(s0, pmul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  if (!a.empty()) {
    std::uint32_t c = invm(a.back(), p);
    for (auto& x : a) x = mulm(x, c, p);
    for (auto& x : s0) x = mulm(x, c, p);
  }
  return {a, s0};
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t m) {
  if (!is_prime_u32(p)) throw input_error("field characteristic must be prime, got " + std::to_string(p));
  if (m < 1) throw input_error("extension degree must be >= 1");
  if (m > 24) throw size_error("extension degree too large: " + std::to_string(m));
  Field f;
  f.p_ = p;
  f.m_ = m;
  if (m == 1) {
    f.modulus_ = {0, 1};
    return f;
  }
  // Smallest monic irreducible of degree m, ordering coefficients by
  // sum(c_i * p^i). The search space is p^m candidates.
  long double bound = 1.0L;
  for (std::uint32_t i = 0; i < m; ++i) bound *= p;
  if (bound > (1ull << 30)) throw size_error("modulus search space too large for GF(" +
                                             std::to_string(p) + "^" + std::to_string(m) + ")");
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < m; ++i) total *= p;
  for (std::uint64_t v = 0; v < total; ++v) {
    Poly cand(m + 1, 0);
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < m; ++i) {
      cand[i] = std::uint32_t(t % p);
      t /= p;
    }
    cand[m] = 1;
    if (is_irreducible(cand, p)) {
      f.modulus_.assign(cand.begin(), cand.end());
      return f;
    }
  }
  throw internal_error("no irreducible polynomial found");  // cannot happen
}

Field Field::parse(const std::string& literal) {
  // GF(p) or GF(p^m)
  auto fail = [&]() -> Field { throw input_error("bad field literal: " + literal); };
  if (literal.size() < 5 || literal.substr(0, 3) != "GF(" || literal.back() != ')') return fail();
  std::string body = literal.substr(3, literal.size() - 4);
  std::size_t caret = body.find('^');
  try {
    if (caret == std::string::npos) {
      return Field::make(std::uint32_t(std::stoul(body)), 1);
    }
    std::uint32_t p = std::uint32_t(std::stoul(body.substr(0, caret)));
    std::uint32_t m = std::uint32_t(std::stoul(body.substr(caret + 1)));
    return Field::make(p, m);
  } catch (const std::logic_error&) {
    return fail();
  }
}

std::string Field::literal() const {
  if (m_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

std::uint64_t Field::order() const {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (r > (1ull << 62) / p_) throw size_error("field order exceeds 2^62");
    r *= p_;
  }
  return r;
}

FElem Field::one() const {
  FElem e(m_, 0);
  e[0] = 1;
  return e;
}

bool Field::is_zero(const FElem& a) const {
  check_elem(a);
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

void Field::check_elem(const FElem& a) const {
  if (a.size() != m_)
    throw input_error("element has " + std::to_string(a.size()) + " coefficients, field " +
                      literal() + " needs " + std::to_string(m_));
  for (std::uint32_t c : a)
    if (c >= p_) throw input_error("element coefficient out of range in " + literal());
}

FElem Field::add(const FElem& a, const FElem& b) const {
  check_elem(a);
  check_elem(b);
  FElem r(m_);
  for (std::uint32_t i = 0; i < m_; ++i) r[i] = addm(a[i], b[i], p_);
  return r;
}

FElem Field::sub(const FElem& a, const FElem& b) const {
  check_elem(a);
  check_elem(b);
  FElem r(m_);
  for (std::uint32_t i = 0; i < m_; ++i) r[i] = subm(a[i], b[i], p_);
  return r;
}

FElem Field::neg(const FElem& a) const {
  check_elem(a);
  FElem r(m_);
  for (std::uint32_t i = 0; i < m_; ++i) r[i] = a[i] == 0 ? 0 : p_ - a[i];
  return r;
}

FElem Field::mul(const FElem& a, const FElem& b) const {
  check_elem(a);
  check_elem(b);
  if (m_ == 1) return FElem{mulm(a[0], b[0], p_)};
  Poly pa(a.begin(), a.end()), pb(b.begin(), b.end());
  ptrim(pa);
  ptrim(pb);
  Poly prod = pmod(pmul(pa, pb, p_), Poly(modulus_.begin(), modulus_.end()), p_);
  FElem r(m_, 0);
  std::copy(prod.begin(), prod.end(), r.begin());
  return r;
}

FElem Field::inv(const FElem& a) const {
  check_elem(a);
  if (is_zero(a)) throw input_error("division by zero in " + literal());
  if (m_ == 1) return FElem{invm(a[0], p_)};
  Poly pa(a.begin(), a.end());
  ptrim(pa);
  auto [g, s] = pxgcd(pa, Poly(modulus_.begin(), modulus_.end()), p_);
  if (pdeg(g) != 0) throw internal_error("modulus is not irreducible");
  FElem r(m_, 0);
  std::copy(s.begin(), s.end(), r.begin());
  return r;
}

std::uint64_t Field::index(const FElem& a) const {
  check_elem(a);
  std::uint64_t idx = 0;
  for (std::uint32_t i = m_; i-- > 0;) idx = idx * p_ + a[i];
  return idx;
}

FElem Field::from_index(std::uint64_t idx) const {
  FElem e(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    e[i] = std::uint32_t(idx % p_);
    idx /= p_;
  }
  if (idx != 0) throw input_error("element index out of range for " + literal());
  return e;
}

FElem Field::embed_from_prime(const Field& source, const FElem& e) const {
  if (!source.prime())
    throw unsupported_error("only prime fields can be embedded, got " + source.literal());
  if (source.p() != p_)
    throw input_error("cannot embed " + source.literal() + " into " + literal() +
                      ": different characteristic");
  source.check_elem(e);
  FElem r(m_, 0);
  r[0] = e[0];
  return r;
}

std::string Field::elem_str(const FElem& a) const {
  check_elem(a);
  std::ostringstream os;
  os << '[';
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ']';
  return os.str();
}

FElem Field::elem_parse(const std::string& text) const {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw input_error("bad element literal: " + text);
  FElem e;
  std::string body = text.substr(1, text.size() - 2);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      e.push_back(std::uint32_t(std::stoul(tok)));
    } catch (const std::logic_error&) {
      throw input_error("bad element literal: " + text);
    }
  }
  if (body.empty()) throw input_error("bad element literal: " + text);
  check_elem(e);
  return e;
}

}  // namespace polymat
