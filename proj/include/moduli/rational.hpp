#pragma once

#include <gmpxx.h>

#include <string>

#include "moduli/errors.hpp"

namespace moduli {

// Exact arbitrary-precision rational. All coefficient arithmetic in the
// toolkit goes through this type; nothing is ever rounded.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational number: '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Image of r in GF(2). Defined only when the denominator is odd.
inline Rational gf2_reduce(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (mpz_even_p(c.get_den().get_mpz_t()))
        throw DomainError("coefficient " + c.get_str() + " has no image in GF(2)");
    Integer num = c.get_num();
    mpz_mod_ui(num.get_mpz_t(), num.get_mpz_t(), 2);
    return Rational(num);
}

}  // namespace moduli
