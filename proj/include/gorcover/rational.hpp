#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gorcover {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "3", "-7/2", "+5". Throws std::invalid_argument on malformed text or a
// zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

}  // namespace gorcover
