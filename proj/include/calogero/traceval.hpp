#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "calogero/algebra.hpp"
#include "calogero/coxgroup.hpp"
#include "calogero/glc.hpp"
#include "calogero/nupoly.hpp"

namespace calogero {

// Exact eigen-decomposition of a group element acting on the ambient space,
// arranged as N dual pairs: column i of u_cols is an eigenvector u_i with
// g u_i = lambda_i u_i, column i of w_cols satisfies g w_i = lambda_i^{-1} w_i,
// and the form pairs them as (u_i, w_j) = delta_{ij}.
//
// The frame letters are indexed by I in [0, 2N): I < N is the alpha = 0 letter
// with vector u_I and conjugation eigenvalue lambda_I; I >= N is the alpha = 1
// letter with vector w_{I-N} and conjugation eigenvalue lambda_{I-N}^{-1}.
// With this normalization the zero-coupling commutator pairing of the letters
// is the standard symplectic form: [b_{0,i}, b_{1,j}]|_{nu=0} = delta_{ij}.
struct EigenFrame {
    unsigned g = 0;
    std::vector<Cyclotomic> lambda;
    Mat<Cyclotomic> u_cols, w_cols;
    Mat<Cyclotomic> u_inv, w_inv;

    unsigned dim() const { return static_cast<unsigned>(lambda.size()); }
    // Conjugation eigenvalue of frame letter I (lambda_I for I < N, the
    // inverse eigenvalue for the dual letter I >= N).
    Cyclotomic letter_lambda(unsigned I) const;
    // Coordinate vector of frame letter I in the ambient space.
    Vector letter_vector(unsigned I) const;
    // The alpha-copy a frame letter belongs to: 0 for I < N, 1 otherwise.
    unsigned letter_alpha(unsigned I) const { return I < dim() ? 0u : 1u; }
    // Index of the symplectic partner letter (same pair, other copy).
    unsigned letter_partner(unsigned I) const { return I < dim() ? I + dim() : I - dim(); }
    // Letter form of frame letter I, usable with AlgebraContext::letter_element.
    Letter letter(unsigned I) const;
};

// Diagonalizes the element exactly over the cyclotomics (always possible for a
// finite-order orthogonal map) and normalizes the dual pairing.
EigenFrame eigenframe(const GroupTable& gt, unsigned g);

// The full commutator of two degree-1 elements, split into its scalar part and
// its reflection part (linear in the couplings).
struct LetterBracket {
    Cyclotomic scalar;
    AlgebraElement reflections;
};
LetterBracket letter_commutator(const AlgebraContext& ctx, const Letter& u, const Letter& v);

// A kappa-trace on the algebra: the unique linear extension of a central
// function satisfying the ground level conditions. Values are polynomials in
// the couplings; evaluation is exact and memoized per normal-form monomial.
//
// strategy_seed = 0 uses the canonical deterministic reduction; any other seed
// derives every discretionary choice in the reduction (which letter a step
// pulls, which symplectic pair anchors a special word) from a hash of the
// local state and the seed. All seeds must produce identical values; the test
// suite checks this.
class KappaTrace {
public:
    KappaTrace(const AlgebraContext& ctx, int kappa, CentralFunction central,
               std::uint64_t strategy_seed = 0);

    const AlgebraContext& context() const { return *ctx_; }
    int kappa() const { return kappa_; }
    const CentralFunction& central() const { return central_; }

    NuPoly evaluate(const AlgebraElement& x) const;
    NuPoly evaluate_monomial(const Monomial& m) const;

    const EigenFrame& frame(unsigned g) const;

private:
    const AlgebraContext* ctx_;
    int kappa_;
    CentralFunction central_;
    std::uint64_t seed_;

    mutable std::mutex mu_;
    mutable std::map<Monomial, NuPoly> memo_;
    mutable std::map<unsigned, EigenFrame> frames_;

    NuPoly eval_uncached(const Monomial& m) const;
    NuPoly eval_frame_word(const std::vector<unsigned>& word, unsigned g,
                           const EigenFrame& fr) const;
    unsigned pick(std::size_t options, const std::vector<unsigned>& word, unsigned g,
                  unsigned salt) const;
};

// Property report for the defining axioms: bracket vanishing on random
// homogeneous pairs and invariance under conjugation by group elements.
struct TraceReport {
    unsigned checked = 0;
    unsigned violations = 0;
    std::string first_failure;
};
TraceReport verify_trace_property(const KappaTrace& tr, unsigned pairs, unsigned max_degree,
                                  std::uint64_t seed);

// Closed-form value of the trace of a normal-ordered monomial at zero
// coupling, computed from the pair-contraction expansion over the eigenframe
// of g (a quasi-free state: sums of perfect matchings of ordered two-letter
// contractions). central0 gives the trace on the group algebra, one value per
// conjugacy class. Nonzero values require every eigenvalue to differ from
// kappa; the contraction kernel throws EigenvalueKappaPresent otherwise, and
// monomials over elements with a kappa-eigenvalue simply evaluate to zero.
Cyclotomic nu0_oracle(const AlgebraContext& ctx, int kappa,
                      const std::vector<Cyclotomic>& central0, unsigned g,
                      const std::vector<unsigned>& e0, const std::vector<unsigned>& e1);

// Gram matrix of the bilinear form (f, h) -> trace(f h) on the basis of
// normal-form monomials of total degree <= max_degree (all group elements),
// evaluated at the given coupling values, with its exact rank.
struct GramReport {
    std::vector<Monomial> basis;
    Mat<Cyclotomic> gram;
    unsigned rank = 0;
};
GramReport bilinear_gram(const KappaTrace& tr, unsigned max_degree,
                         const std::vector<Cyclotomic>& nu);

}  // namespace calogero
