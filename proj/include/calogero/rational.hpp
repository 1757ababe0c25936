#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "calogero/errors.hpp"

namespace calogero {

// Exact arbitrary-precision rationals, backed by GMP. mpq_class keeps values
// canonical (reduced, positive denominator) as long as inputs are canonical,
// which the helpers below guarantee.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", or "p/q". Throws SyntaxError on malformed input,
// DivisionByZero on a zero denominator.
inline Rational parse_rational(const std::string& text) {
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw SyntaxError("malformed rational '" + text + "'", 0);
    if (r.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational acc(1);
    Rational b = base;
    unsigned long k = e;
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

// Fast structural hash over the GMP limb representation.
inline std::size_t hash_integer(const mpz_class& z) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) + 0x9e3779b97f4a7c15ULL;
    const std::size_t n = mpz_size(p);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t limb = static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i)));
        h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

inline std::size_t hash_rational(const Rational& r) {
    std::size_t h = hash_integer(r.get_num());
    h ^= hash_integer(r.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace calogero
