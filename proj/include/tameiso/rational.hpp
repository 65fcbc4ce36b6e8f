#pragma once

#include <gmpxx.h>

#include <string>

namespace tameiso {

// Exact arbitrary-precision arithmetic, backed by GMP.
using Integer = mpz_class;
using Rational = mpq_class;

// Builds a canonical fraction; den must be nonzero.
inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical "n" or "n/d" form (d > 0, gcd-reduced).
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace tameiso
