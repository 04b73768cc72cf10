#ifndef CHARLOCI_RATIONAL_HPP
#define CHARLOCI_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace charloci {

// Arbitrary-precision rationals. mpq_class keeps values canonical
// (lowest terms, positive denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p" or "p/q" with optional sign; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

// Integer power with negative exponents allowed; the base must be nonzero
// when exponent < 0.
Rational pow(const Rational& base, long exponent);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

}  // namespace charloci

#endif
