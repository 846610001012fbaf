#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace folindex {

// Exact arithmetic backbone: arbitrary-precision integers and rationals.
// mpq_class canonical form (lowest terms, positive denominator) is exactly
// the representation contract the rest of the engine relies on.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den with canonicalization; throws std::invalid_argument on zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p" or "p/q", lowest terms, '-' prefix for negatives.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// gmpxx has no long long constructor; decimal text keeps the value exact.
inline Integer to_integer(long long v) { return Integer(std::to_string(v)); }

inline bool fits_int64(const Integer& z) {
    return z.fits_slong_p();  // long is 64-bit on this platform
}

}  // namespace folindex
