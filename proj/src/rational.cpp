#include "polymat/rational.hpp"

#include <cctype>

namespace polymat {

Rational rat_parse(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
      throw input_error("bad rational literal: " + text);
  }
  try {
    Rational q(text);
    if (q.get_den() == 0) throw input_error("zero denominator in: " + text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw input_error("bad rational literal: " + text);
  }
}

std::string rat_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_str_short(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return rat_str(q);
}

std::optional<std::int64_t> rat_to_int64(const Rational& q) {
  if (q.get_den() != 1) return std::nullopt;
  const mpz_class& n = q.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  long v = n.get_si();
  return static_cast<std::int64_t>(v);
}

}  // namespace polymat
