#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rookalg {

// All arithmetic in this project is exact. Rationals are GMP-backed; there is
// no floating point anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline Rational rational_of(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q".
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace rookalg
