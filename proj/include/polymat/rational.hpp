#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "polymat/common.hpp"

namespace polymat {

/// Exact rational. GMP keeps it canonical: denominator > 0, gcd(|num|, den) = 1.
using Rational = mpq_class;

/// Parses "n" or "n/d" (optional sign, arbitrary precision). Throws input_error.
Rational rat_parse(const std::string& text);

/// Always "n/d", canonical form (so integers print as "k/1").
std::string rat_str(const Rational& q);

/// "n" for integers, "n/d" otherwise. Display form.
std::string rat_str_short(const Rational& q);

/// Exact int64 value if q is integral and fits; nullopt otherwise.
std::optional<std::int64_t> rat_to_int64(const Rational& q);

}  // namespace polymat
