#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "calogero/cyclotomic.hpp"

namespace calogero {

// A polynomial in the coupling constants nu_1..nu_k (one indeterminate per
// reflection conjugacy class) with Cyclotomic coefficients. Terms map a dense
// exponent vector to a nonzero coefficient.
//
// Binary operations require equal variable counts; constants (including the
// zero polynomial) lift to the other operand's variable count automatically.
class NuPoly {
public:
    using Exponents = std::vector<std::uint16_t>;

    NuPoly() = default;
    NuPoly(long v) : NuPoly(Cyclotomic(v), 0) {}  // NOLINT(google-explicit-constructor)
    NuPoly(const Cyclotomic& c) : NuPoly(c, 0) {}  // NOLINT(google-explicit-constructor)
    NuPoly(const Cyclotomic& c, unsigned nvars);

    static NuPoly zero(unsigned nvars) {
        NuPoly p;
        p.nvars_ = nvars;
        return p;
    }

    static NuPoly variable(unsigned k, unsigned nvars);
    static NuPoly monomial(const Exponents& e, const Cyclotomic& c);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant term (zero Cyclotomic if absent).
    Cyclotomic constant_value() const;
    unsigned degree() const;  // total degree; 0 for the zero polynomial

    const std::map<Exponents, Cyclotomic>& terms() const { return terms_; }

    NuPoly operator-() const;
    NuPoly& operator+=(const NuPoly& o);
    NuPoly& operator-=(const NuPoly& o);
    NuPoly& operator*=(const NuPoly& o);
    NuPoly& operator*=(const Cyclotomic& c);

    friend NuPoly operator+(NuPoly a, const NuPoly& b) { return a += b; }
    friend NuPoly operator-(NuPoly a, const NuPoly& b) { return a -= b; }
    friend NuPoly operator*(NuPoly a, const NuPoly& b) { return a *= b; }
    friend NuPoly operator*(NuPoly a, const Cyclotomic& c) { return a *= c; }
    friend NuPoly operator*(const Cyclotomic& c, NuPoly a) { return a *= c; }

    bool operator==(const NuPoly& o) const;
    bool operator!=(const NuPoly& o) const { return !(*this == o); }

    // Ring homomorphism to Cyclotomic at the point nu = values.
    Cyclotomic evaluate(const std::vector<Cyclotomic>& values) const;

    // Exact division: returns a/b when b divides a, std::nullopt otherwise.
    static std::optional<NuPoly> divide_exact(const NuPoly& a, const NuPoly& b);

    // Text form using names "nu" (one variable) or "nu_1".. otherwise; a
    // custom name list may be supplied.
    std::string to_string(const std::vector<std::string>& names = {}) const;

    std::size_t hash() const;

private:
    unsigned nvars_ = 0;
    std::map<Exponents, Cyclotomic> terms_;

    void add_term(const Exponents& e, const Cyclotomic& c);
    static void align(NuPoly& a, NuPoly& b);
};

}  // namespace calogero
