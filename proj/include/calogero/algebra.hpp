#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "calogero/coxgroup.hpp"
#include "calogero/nupoly.hpp"
#include "calogero/rootsystem.hpp"

namespace calogero {

// A normal-ordered basis monomial a_{0,1}^{e0_1}..a_{0,N}^{e0_N} *
// a_{1,1}^{e1_1}..a_{1,N}^{e1_N} * g. The order (all alpha = 0 factors, then
// all alpha = 1 factors, then one group element) is canonical: same-alpha
// generators commute, so each block is determined by its exponent vector.
struct Monomial {
    std::vector<std::uint16_t> e0;
    std::vector<std::uint16_t> e1;
    unsigned g = 0;

    unsigned degree() const;

    bool operator==(const Monomial& o) const = default;
    bool operator<(const Monomial& o) const {
        if (e0 != o.e0) return e0 < o.e0;
        if (e1 != o.e1) return e1 < o.e1;
        return g < o.g;
    }
};

enum class Parity { even, odd, mixed };

// A degree-1 element with an explicit coordinate vector in each of the two
// copies of the ambient space: c0 in the alpha = 0 copy, c1 in the alpha = 1
// copy. Used wherever linear combinations of generators act as a unit
// (eigenbases, bracket rows).
struct Letter {
    Vector c0;
    Vector c1;
};

class AlgebraContext;

// An element of the deformed skew product algebra over a fixed context, stored
// as its canonical normal form: a map from Monomial to a nonzero NuPoly
// coefficient. Elements are immutable values; all operations are pure.
class AlgebraElement {
public:
    AlgebraElement() = default;  // the zero element of no particular context

    const AlgebraContext* context() const { return ctx_; }
    const std::map<Monomial, NuPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Maximum total a-degree over terms; 0 for the zero element.
    unsigned degree() const;
    Parity parity() const;
    AlgebraElement even_part() const;
    AlgebraElement odd_part() const;

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const NuPoly& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const NuPoly& c) { return a *= c; }
    friend AlgebraElement operator*(const NuPoly& c, AlgebraElement a) { return a *= c; }

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    friend class AlgebraContext;
    friend AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

    const AlgebraContext* ctx_ = nullptr;
    std::map<Monomial, NuPoly> terms_;

    void add_term(const Monomial& m, const NuPoly& c);
};

// Shared read-only state for one algebra: the group table, the table of
// generator-pair commutators [a_{0,i}, a_{1,j}], and the inverse Gram matrix.
// The context must outlive every element created from it.
class AlgebraContext {
public:
    explicit AlgebraContext(const GroupTable& gt, unsigned degree_cap = 12);

    // Elements keep back-pointers to their context, so the context is pinned.
    AlgebraContext(const AlgebraContext&) = delete;
    AlgebraContext& operator=(const AlgebraContext&) = delete;

    const GroupTable& group() const { return *gt_; }
    const RootSystem& root_system() const { return gt_->root_system(); }
    unsigned dim() const { return root_system().rank; }
    unsigned nvars() const { return root_system().num_nu_classes; }
    unsigned degree_cap() const { return cap_; }
    const Mat<Cyclotomic>& gram_inverse() const { return gram_inv_; }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement scalar(const NuPoly& c) const;
    AlgebraElement generator(unsigned alpha, unsigned i) const;  // a_{alpha,i}
    AlgebraElement group_element(unsigned id) const;
    AlgebraElement monomial_element(const Monomial& m, const NuPoly& c) const;
    // sum_i c0_i a_{0,i} + sum_i c1_i a_{1,i}
    AlgebraElement letter_element(const Letter& l) const;

    // [a_{0,i}, a_{1,j}] = (e_i,e_j)*1 + sum over root pairs w of
    // 2 nu_w (e_i,w)(e_j,w)/(w,w) R_w, precomputed once per context.
    const AlgebraElement& pair_commutator(unsigned i, unsigned j) const;

private:
    const GroupTable* gt_;
    unsigned cap_;
    Mat<Cyclotomic> gram_inv_;
    std::vector<AlgebraElement> btable_;  // row-major [i*N + j]
};

// Canonical normal form of the product. Throws SystemMismatch when the
// operands live over different contexts, DegreeCapExceeded when an
// intermediate term would exceed the context's total-degree cap.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    return multiply(x, y);
}

// [x, y]_kappa = sum over parity-homogeneous parts x_p, y_q of
// x_p y_q - kappa^{pq} y_q x_p. kappa = +1 is the commutator on all elements,
// kappa = -1 the supercommutator.
AlgebraElement kappa_bracket(const AlgebraElement& x, const AlgebraElement& y, int kappa);

// T_{alpha beta} = 1/2 sum_{ij} (G^{-1})_{ij} {a_{alpha,i}, a_{beta,j}}.
// The inverse-Gram contraction makes the definition independent of the
// coordinate basis; with an orthonormal Gram it is the familiar
// 1/2 sum_i {a_{alpha,i}, a_{beta,i}}.
AlgebraElement sl2_generator(const AlgebraContext& ctx, unsigned alpha, unsigned beta);

// tau^{-1} x tau
AlgebraElement conjugate(const AlgebraElement& x, unsigned tau);

}  // namespace calogero
