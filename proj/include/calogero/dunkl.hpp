#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "calogero/algebra.hpp"
#include "calogero/coxgroup.hpp"
#include "calogero/nupoly.hpp"
#include "calogero/rootsystem.hpp"

namespace calogero {

// An exact polynomial function on the ambient space: a finite sum of
// coordinate monomials x_1^{m_1}..x_N^{m_N} with coupling-polynomial
// coefficients. Dunkl operators are closed on this space.
class PolyFunction {
public:
    using Exponents = std::vector<std::uint16_t>;

    PolyFunction() = default;
    explicit PolyFunction(unsigned dim) : dim_(dim) {}

    static PolyFunction zero(unsigned dim) { return PolyFunction(dim); }
    static PolyFunction constant(unsigned dim, const NuPoly& c);
    static PolyFunction monomial(const Exponents& e, const NuPoly& c);
    // The coordinate function x_i (not the form; see coordinate_form).
    static PolyFunction coordinate(unsigned dim, unsigned i);

    unsigned dim() const { return dim_; }
    const std::map<Exponents, NuPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;  // total degree; 0 for the zero polynomial

    PolyFunction operator-() const;
    PolyFunction& operator+=(const PolyFunction& o);
    PolyFunction& operator-=(const PolyFunction& o);
    PolyFunction& operator*=(const NuPoly& c);

    friend PolyFunction operator+(PolyFunction a, const PolyFunction& b) { return a += b; }
    friend PolyFunction operator-(PolyFunction a, const PolyFunction& b) { return a -= b; }
    friend PolyFunction operator*(PolyFunction a, const NuPoly& c) { return a *= c; }
    friend PolyFunction operator*(const NuPoly& c, PolyFunction a) { return a *= c; }

    bool operator==(const PolyFunction& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }
    bool operator!=(const PolyFunction& o) const { return !(*this == o); }

    std::string to_string() const;

    void add_term(const Exponents& e, const NuPoly& c);

private:
    unsigned dim_ = 0;
    std::map<Exponents, NuPoly> terms_;
};

PolyFunction multiply(const PolyFunction& a, const PolyFunction& b);
inline PolyFunction operator*(const PolyFunction& a, const PolyFunction& b) {
    return multiply(a, b);
}

// Partial derivative along the coordinate axis i.
PolyFunction derivative(const PolyFunction& p, unsigned i);

// The linear form (x, e_i) = sum_k G_{ki} x_k as a polynomial.
PolyFunction coordinate_form(const RootSystem& rs, unsigned i);

// Pullback along the inverse action: (g^ p)(x) = p(g^{-1} x).
PolyFunction group_pullback(const GroupTable& gt, unsigned g, const PolyFunction& p);
// Pullback along one reflection (self-inverse), without a group table.
PolyFunction reflection_pullback(const RootSystem& rs, unsigned root_index,
                                 const PolyFunction& p);

// Exact division by the linear form sum_k coeffs_k x_k. Throws
// DivisibilityFailure when the division leaves a remainder (which signals an
// implementation bug in the callers here, never valid input).
PolyFunction divide_linear(const PolyFunction& p, const Vector& coeffs);

// The Dunkl operator along axis i,
//   D_i p = d p / d x_i + sum over root pairs {w,-w} of
//           nu_w (e_i, w) / (x, w) * (p - R_w^ p),
// closed on polynomials because p - R_w^ p vanishes on the reflection
// hyperplane and is therefore exactly divisible by (x, w).
PolyFunction dunkl_apply(const RootSystem& rs, unsigned i, const PolyFunction& p);

// Unnormalized generator representation y_{alpha,i} = X_i + (-1)^alpha D_i
// with X_i multiplication by (x, e_i). The y's are sqrt(2) times the abstract
// generators, so every commutator identity picks up one factor of 2 per
// contracted pair; callers do that bookkeeping explicitly.
PolyFunction rep_generator_apply(const RootSystem& rs, unsigned alpha, unsigned i,
                                 const PolyFunction& p);

// Representation of a whole element, unnormalized: the monomial
// A0^{e0} A1^{e1} g acts as y_0^{e0} y_1^{e1} g^. For an element that is
// homogeneous of a-degree d this equals 2^{d/2} times the normalized
// representation.
PolyFunction rep_apply(const GroupTable& gt, const AlgebraElement& x, const PolyFunction& p);

// Built-in identity suite for the representation (commutativity of the Dunkl
// operators, the sl2 ladder relations for T_01, and its reflection
// invariance), checked exhaustively on the monomial basis up to max_degree.
struct DunklReport {
    unsigned checked = 0;
    unsigned violations = 0;
    std::string first_failure;
};
DunklReport calogero_check(const GroupTable& gt, unsigned max_degree = 6);

}  // namespace calogero
