#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "calogero/errors.hpp"
#include "calogero/rational.hpp"

namespace calogero {

// An exact element of the cyclotomic field Q(zeta_n), represented as the
// canonical residue modulo the n-th cyclotomic polynomial: a dense coefficient
// vector of length phi(n) over Q. Conductor 1 is plain Q (vector length 1).
//
// Arithmetic between different conductors embeds both operands into
// Q(zeta_lcm) when auto-embedding is enabled (the default); otherwise a
// ConductorMismatch is thrown. Equality always compares semantically.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1) {}
    Cyclotomic(long v) : n_(1), c_(1, Rational(v)) {}  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& v) : n_(1), c_(1, v) {}  // NOLINT(google-explicit-constructor)

    static Cyclotomic zero(unsigned n);
    static Cyclotomic from_rational(const Rational& v, unsigned n);
    // zeta(n)^power, any integer power (reduced mod n).
    static Cyclotomic zeta(unsigned n, long power = 1);

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // The value as a Rational; requires is_rational().
    Rational rational_value() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Multiplicative inverse; throws DivisionByZero on zero.
    Cyclotomic inverse() const;
    // The field automorphism zeta_n -> zeta_n^{-1}.
    Cyclotomic conjugate() const;
    // Image in Q(zeta_m) under zeta_n -> zeta_m^{m/n}; requires n | m.
    Cyclotomic embed(unsigned m) const;
    // Conductor-1 copy when the value is rational, otherwise *this unchanged.
    Cyclotomic trimmed() const;

    Cyclotomic pow(unsigned long e) const;

    // Canonical text form: polynomial in "z" (conductor from context),
    // e.g. "1+2*z^3", "-1/2*z". Zero prints as "0".
    std::string to_string() const;

    std::size_t hash() const;

    // Toggles automatic embedding for mixed-conductor arithmetic. Returns the
    // previous setting. Equality comparison is unaffected.
    static bool set_auto_embed(bool enabled);

private:
    unsigned n_;
    std::vector<Rational> c_;  // length phi(n_)

    Cyclotomic(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    static void align(Cyclotomic& a, Cyclotomic& b, bool for_arithmetic);
};

inline Cyclotomic operator+(long a, const Cyclotomic& b) { return Cyclotomic(a) + b; }
inline Cyclotomic operator*(long a, const Cyclotomic& b) { return Cyclotomic(a) * b; }
inline Cyclotomic operator*(const Rational& a, const Cyclotomic& b) { return Cyclotomic(a) * b; }

// phi(n), Euler's totient.
unsigned euler_phi(unsigned n);

struct CyclotomicHash {
    std::size_t operator()(const Cyclotomic& c) const { return c.hash(); }
};

}  // namespace calogero
