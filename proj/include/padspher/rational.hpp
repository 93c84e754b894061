#pragma once

#include <gmpxx.h>

#include <string>

namespace padspher {

// Exact arbitrary-precision rationals.  Everything in this library that is
// called a "coefficient" is one of these; there is no floating point.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical "a" or "a/b" rendering (b > 0, gcd(a,b) = 1).
inline std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

} // namespace padspher
