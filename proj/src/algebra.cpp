#include "calogero/algebra.hpp"

#include <sstream>

#include "calogero/errors.hpp"

namespace calogero {

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto e : e0) d += e;
    for (auto e : e1) d += e;
    return d;
}

// ---------------------------------------------------------------------------
// AlgebraElement
// ---------------------------------------------------------------------------

void AlgebraElement::add_term(const Monomial& m, const NuPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

unsigned AlgebraElement::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Parity AlgebraElement::parity() const {
    bool even = false, odd = false;
    for (const auto& [m, c] : terms_) ((m.degree() % 2 == 0) ? even : odd) = true;
    if (even && odd) return Parity::mixed;
    return odd ? Parity::odd : Parity::even;  // zero counts as even
}

AlgebraElement AlgebraElement::even_part() const {
    AlgebraElement out;
    out.ctx_ = ctx_;
    for (const auto& [m, c] : terms_)
        if (m.degree() % 2 == 0) out.terms_.emplace(m, c);
    return out;
}

AlgebraElement AlgebraElement::odd_part() const {
    AlgebraElement out;
    out.ctx_ = ctx_;
    for (const auto& [m, c] : terms_)
        if (m.degree() % 2 == 1) out.terms_.emplace(m, c);
    return out;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out;
    out.ctx_ = ctx_;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

namespace {

void require_same_context(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.context() && b.context() && a.context() != b.context())
        throw SystemMismatch("elements belong to different algebra contexts");
}

}  // namespace

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    require_same_context(*this, o);
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    require_same_context(*this, o);
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const NuPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (unsigned i = 0; i < m.e0.size(); ++i) {
            if (m.e0[i] == 0) continue;
            os << " a0_" << (i + 1);
            if (m.e0[i] > 1) os << "^" << m.e0[i];
        }
        for (unsigned i = 0; i < m.e1.size(); ++i) {
            if (m.e1[i] == 0) continue;
            os << " a1_" << (i + 1);
            if (m.e1[i] > 1) os << "^" << m.e1[i];
        }
        if (m.g != 0) os << " g" << m.g;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// AlgebraContext
// ---------------------------------------------------------------------------

AlgebraContext::AlgebraContext(const GroupTable& gt, unsigned degree_cap)
    : gt_(&gt), cap_(degree_cap) {
    const RootSystem& rs = gt.root_system();
    const unsigned n = rs.rank;
    auto inv = inverse(rs.gram);
    if (!inv) throw Error("Gram matrix is singular");
    gram_inv_ = std::move(*inv);

    btable_.resize(static_cast<std::size_t>(n) * n);
    // (e_i, w) = (G w)_i for each root-pair representative w
    std::vector<Vector> gw;
    std::vector<Cyclotomic> ww;
    for (unsigned w : rs.reflection_pairs) {
        Vector col(n, Cyclotomic(0));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned k = 0; k < n; ++k) col[i] += rs.gram.at(i, k) * rs.roots[w][k];
        gw.push_back(std::move(col));
        ww.push_back(rs.form(rs.roots[w], rs.roots[w]));
    }
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            AlgebraElement b;
            b.ctx_ = this;
            Monomial unit{std::vector<std::uint16_t>(n, 0), std::vector<std::uint16_t>(n, 0), 0};
            b.add_term(unit, NuPoly(rs.gram.at(i, j), nvars()));
            for (unsigned p = 0; p < rs.reflection_pairs.size(); ++p) {
                unsigned w = rs.reflection_pairs[p];
                Cyclotomic num = gw[p][i] * gw[p][j];
                if (num.is_zero()) continue;
                Monomial refl = unit;
                refl.g = gt.reflection_element(w);
                NuPoly coeff = NuPoly(Cyclotomic(2) * num / ww[p]) *
                               NuPoly::variable(rs.nu_class_of_root[w], nvars());
                b.add_term(refl, coeff);
            }
            btable_[static_cast<std::size_t>(i) * n + j] = std::move(b);
        }
    }
}

const AlgebraElement& AlgebraContext::pair_commutator(unsigned i, unsigned j) const {
    unsigned n = dim();
    if (i >= n || j >= n) throw UnknownGenerator("generator index out of range");
    return btable_[static_cast<std::size_t>(i) * n + j];
}

AlgebraElement AlgebraContext::zero() const {
    AlgebraElement e;
    e.ctx_ = this;
    return e;
}

AlgebraElement AlgebraContext::one() const { return scalar(NuPoly(Cyclotomic(1), nvars())); }

AlgebraElement AlgebraContext::scalar(const NuPoly& c) const {
    AlgebraElement e = zero();
    Monomial m{std::vector<std::uint16_t>(dim(), 0), std::vector<std::uint16_t>(dim(), 0), 0};
    e.add_term(m, c);
    return e;
}

AlgebraElement AlgebraContext::generator(unsigned alpha, unsigned i) const {
    if (alpha > 1) throw UnknownGenerator("alpha must be 0 or 1");
    if (i >= dim()) throw UnknownGenerator("generator index out of range");
    AlgebraElement e = zero();
    Monomial m{std::vector<std::uint16_t>(dim(), 0), std::vector<std::uint16_t>(dim(), 0), 0};
    (alpha == 0 ? m.e0 : m.e1)[i] = 1;
    e.add_term(m, NuPoly(Cyclotomic(1), nvars()));
    return e;
}

AlgebraElement AlgebraContext::group_element(unsigned id) const {
    if (id >= gt_->size()) throw UnknownGenerator("group element id out of range");
    AlgebraElement e = zero();
    Monomial m{std::vector<std::uint16_t>(dim(), 0), std::vector<std::uint16_t>(dim(), 0), id};
    e.add_term(m, NuPoly(Cyclotomic(1), nvars()));
    return e;
}

AlgebraElement AlgebraContext::monomial_element(const Monomial& m, const NuPoly& c) const {
    if (m.e0.size() != dim() || m.e1.size() != dim())
        throw SystemMismatch("monomial exponent length does not match the ambient dimension");
    if (m.g >= gt_->size()) throw UnknownGenerator("group element id out of range");
    AlgebraElement e = zero();
    e.add_term(m, c);
    return e;
}

AlgebraElement AlgebraContext::letter_element(const Letter& l) const {
    if (l.c0.size() != dim() || l.c1.size() != dim())
        throw SystemMismatch("letter coordinate length does not match the ambient dimension");
    AlgebraElement e = zero();
    for (unsigned i = 0; i < dim(); ++i) {
        if (!l.c0[i].is_zero()) e += NuPoly(l.c0[i]) * generator(0, i);
        if (!l.c1[i].is_zero()) e += NuPoly(l.c1[i]) * generator(1, i);
    }
    return e;
}

// ---------------------------------------------------------------------------
// Multiplication by rewriting
// ---------------------------------------------------------------------------

namespace {

// Right-multiplies the normal-ordered sum `x` by a_{1,i}: the group element of
// each term conjugates the letter into a linear combination, which then joins
// the alpha = 1 block directly.
AlgebraElement append_a1(const AlgebraContext& ctx, const AlgebraElement& x, unsigned i) {
    AlgebraElement out = ctx.zero();
    for (const auto& [m, c] : x.terms()) {
        if (m.degree() + 1 > ctx.degree_cap())
            throw DegreeCapExceeded("term degree would exceed the configured cap");
        const Mat<Cyclotomic>& mat = ctx.group().matrix(m.g);
        for (unsigned j = 0; j < ctx.dim(); ++j) {
            const Cyclotomic& mji = mat.at(j, i);
            if (mji.is_zero()) continue;
            Monomial t = m;
            ++t.e1[j];
            out += ctx.monomial_element(t, c * NuPoly(mji));
        }
    }
    return out;
}

// Normal form of A1^q a_{0,j} (no leading alpha = 0 block, no trailing group
// element): peel one a_{1,k} off the block, swap it past a_{0,j} at the cost
// of the pair commutator, and recurse on the shorter block.
AlgebraElement order_a0_through(const AlgebraContext& ctx, const std::vector<std::uint16_t>& q,
                                unsigned j) {
    const unsigned n = ctx.dim();
    unsigned k = n;
    for (unsigned idx = n; idx-- > 0;)
        if (q[idx] > 0) {
            k = idx;
            break;
        }
    if (k == n) {  // empty block
        Monomial m{std::vector<std::uint16_t>(n, 0), std::vector<std::uint16_t>(n, 0), 0};
        m.e0[j] = 1;
        return ctx.monomial_element(m, NuPoly(Cyclotomic(1), ctx.nvars()));
    }
    std::vector<std::uint16_t> q1 = q;
    --q1[k];
    AlgebraElement rec = order_a0_through(ctx, q1, j);
    AlgebraElement out = append_a1(ctx, rec, k);
    // correction term: - A1^{q - e_k} [a_{0,j}, a_{1,k}]
    for (const auto& [bm, bc] : ctx.pair_commutator(j, k).terms()) {
        Monomial t = bm;
        for (unsigned idx = 0; idx < n; ++idx) t.e1[idx] += q1[idx];
        out += ctx.monomial_element(t, -bc);
    }
    return out;
}

// Right-multiplies the normal-ordered sum `x` by a_{0,i}.
AlgebraElement append_a0(const AlgebraContext& ctx, const AlgebraElement& x, unsigned i) {
    AlgebraElement out = ctx.zero();
    for (const auto& [m, c] : x.terms()) {
        if (m.degree() + 1 > ctx.degree_cap())
            throw DegreeCapExceeded("term degree would exceed the configured cap");
        const Mat<Cyclotomic>& mat = ctx.group().matrix(m.g);
        for (unsigned j = 0; j < ctx.dim(); ++j) {
            const Cyclotomic& mji = mat.at(j, i);
            if (mji.is_zero()) continue;
            // A0^{e0} (A1^{e1} a_{0,j}) g: reorder the middle, then restore
            // the inert alpha = 0 block and the trailing group element.
            AlgebraElement mid = order_a0_through(ctx, m.e1, j);
            for (const auto& [tm, tc] : mid.terms()) {
                Monomial t = tm;
                for (unsigned idx = 0; idx < ctx.dim(); ++idx) t.e0[idx] += m.e0[idx];
                t.g = ctx.group().product(t.g, m.g);
                out += ctx.monomial_element(t, c * NuPoly(mji) * tc);
            }
        }
    }
    return out;
}

}  // namespace

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_context(x, y);
    const AlgebraContext* ctx = x.context() ? x.context() : y.context();
    if (!ctx) return AlgebraElement();  // zero * zero with no context
    AlgebraElement out = ctx->zero();
    for (const auto& [m2, c2] : y.terms()) {
        AlgebraElement acc = x;
        for (unsigned i = 0; i < ctx->dim(); ++i)
            for (unsigned rep = 0; rep < m2.e0[i]; ++rep) acc = append_a0(*ctx, acc, i);
        for (unsigned i = 0; i < ctx->dim(); ++i)
            for (unsigned rep = 0; rep < m2.e1[i]; ++rep) acc = append_a1(*ctx, acc, i);
        if (m2.g != 0) {
            AlgebraElement shifted = ctx->zero();
            for (const auto& [tm, tc] : acc.terms()) {
                Monomial t = tm;
                t.g = ctx->group().product(t.g, m2.g);
                shifted += ctx->monomial_element(t, tc);
            }
            acc = std::move(shifted);
        }
        acc *= c2;
        out += acc;
    }
    return out;
}

AlgebraElement kappa_bracket(const AlgebraElement& x, const AlgebraElement& y, int kappa) {
    AlgebraElement out;
    const AlgebraElement xs[2] = {x.even_part(), x.odd_part()};
    const AlgebraElement ys[2] = {y.even_part(), y.odd_part()};
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            if (xs[p].is_zero() || ys[q].is_zero()) continue;
            AlgebraElement fwd = multiply(xs[p], ys[q]);
            AlgebraElement bwd = multiply(ys[q], xs[p]);
            if (kappa == -1 && p == 1 && q == 1)
                out += fwd + bwd;
            else
                out += fwd - bwd;
        }
    }
    return out;
}

AlgebraElement sl2_generator(const AlgebraContext& ctx, unsigned alpha, unsigned beta) {
    AlgebraElement out = ctx.zero();
    const Cyclotomic half(make_rational(1, 2));
    for (unsigned i = 0; i < ctx.dim(); ++i) {
        for (unsigned j = 0; j < ctx.dim(); ++j) {
            const Cyclotomic& gij = ctx.gram_inverse().at(i, j);
            if (gij.is_zero()) continue;
            AlgebraElement ai = ctx.generator(alpha, i);
            AlgebraElement bj = ctx.generator(beta, j);
            out += NuPoly(half * gij) * (multiply(ai, bj) + multiply(bj, ai));
        }
    }
    return out;
}

AlgebraElement conjugate(const AlgebraElement& x, unsigned tau) {
    const AlgebraContext* ctx = x.context();
    if (!ctx) return x;
    unsigned tinv = ctx->group().inverse(tau);
    return multiply(ctx->group_element(tinv), multiply(x, ctx->group_element(tau)));
}

}  // namespace calogero
