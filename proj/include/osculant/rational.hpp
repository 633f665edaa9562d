#pragma once

#include <gmpxx.h>

#include <string>

namespace osculant {

// Exact rational arithmetic. mpq_class keeps values canonical (lowest terms,
// positive denominator), so equality of values is structural equality.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational_from_string(const std::string& text) {
    Rational q(text);
    q.canonicalize();
    return q;
}

// Canonical form used by the plain-text polynomial serialization: the
// integer alone when the denominator is 1, "num/den" otherwise.
inline std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r(1);
    Rational b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace osculant
