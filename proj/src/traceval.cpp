#include "calogero/traceval.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "calogero/errors.hpp"

namespace calogero {

// ---------------------------------------------------------------------------
// EigenFrame accessors
// ---------------------------------------------------------------------------

Cyclotomic EigenFrame::letter_lambda(unsigned I) const {
    unsigned n = dim();
    return I < n ? lambda[I] : lambda[I - n].inverse();
}

Vector EigenFrame::letter_vector(unsigned I) const {
    unsigned n = dim();
    const Mat<Cyclotomic>& m = I < n ? u_cols : w_cols;
    unsigned col = I < n ? I : I - n;
    Vector v(n);
    for (unsigned r = 0; r < n; ++r) v[r] = m.at(r, col);
    return v;
}

Letter EigenFrame::letter(unsigned I) const {
    unsigned n = dim();
    Letter l;
    l.c0.assign(n, Cyclotomic(0));
    l.c1.assign(n, Cyclotomic(0));
    if (I < n)
        l.c0 = letter_vector(I);
    else
        l.c1 = letter_vector(I);
    return l;
}

// ---------------------------------------------------------------------------
// Exact eigen-decomposition with normalized dual pairing
// ---------------------------------------------------------------------------

EigenFrame eigenframe(const GroupTable& gt, unsigned g) {
    const RootSystem& rs = gt.root_system();
    unsigned N = rs.rank;
    EigenFrame fr;
    fr.g = g;
    fr.u_cols = Mat<Cyclotomic>(N, N);
    fr.w_cols = Mat<Cyclotomic>(N, N);
    fr.u_inv = Mat<Cyclotomic>(N, N);
    fr.w_inv = Mat<Cyclotomic>(N, N);
    if (N == 0) return fr;

    const Mat<Cyclotomic>& M = gt.matrix(g);
    unsigned n = gt.order_of(g);

    // Eigenvalues are n-th roots of unity and the action is semisimple
    // (x^n - 1 is squarefree), so kernel bases of M - zeta^k fill the space.
    std::map<unsigned, std::vector<Vector>> spaces;
    unsigned total = 0;
    for (unsigned k = 0; k < n && total < N; ++k) {
        Cyclotomic lam = Cyclotomic::zeta(n, static_cast<long>(k));
        Mat<Cyclotomic> A = M;
        for (unsigned i = 0; i < N; ++i) A.at(i, i) -= lam;
        auto kb = kernel_basis(A);
        if (!kb.empty()) {
            total += static_cast<unsigned>(kb.size());
            spaces.emplace(k, std::move(kb));
        }
    }
    if (total != N) throw Error("eigenframe: eigenvectors do not span the ambient space");

    fr.lambda.assign(N, Cyclotomic(0));
    unsigned next = 0;
    auto place = [&](const Cyclotomic& lam, const std::vector<Vector>& us,
                     const std::vector<Vector>& ws) {
        for (std::size_t i = 0; i < us.size(); ++i) {
            fr.lambda[next] = lam;
            for (unsigned r = 0; r < N; ++r) {
                fr.u_cols.at(r, next) = us[i][r];
                fr.w_cols.at(r, next) = ws[i][r];
            }
            ++next;
        }
    };
    // dual[j] = sum_k prim[k] * Q(k, j) for a coefficient matrix Q.
    auto combine = [&](const std::vector<Vector>& prim, const Mat<Cyclotomic>& q) {
        std::vector<Vector> out(prim.size(), Vector(N, Cyclotomic(0)));
        for (std::size_t j = 0; j < prim.size(); ++j)
            for (std::size_t k = 0; k < prim.size(); ++k) {
                const Cyclotomic& c = q.at(static_cast<unsigned>(k), static_cast<unsigned>(j));
                if (c.is_zero()) continue;
                for (unsigned r = 0; r < N; ++r) out[j][r] += prim[k][r] * c;
            }
        return out;
    };

    std::set<unsigned> done;
    for (const auto& [k, basis] : spaces) {
        if (done.count(k)) continue;
        unsigned kinv = (n - k) % n;
        unsigned m = static_cast<unsigned>(basis.size());
        if (kinv == k) {
            // Self-dual eigenvalue (+1 or -1): dualize within the block.
            Mat<Cyclotomic> P(m, m);
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; j < m; ++j) P.at(i, j) = rs.form(basis[i], basis[j]);
            auto Pinv = inverse(P);
            if (!Pinv) throw Error("eigenframe: degenerate pairing on a self-dual eigenspace");
            place(Cyclotomic::zeta(n, static_cast<long>(k)), basis, combine(basis, *Pinv));
            done.insert(k);
        } else {
            auto itB = spaces.find(kinv);
            if (itB == spaces.end() || itB->second.size() != m)
                throw Error("eigenframe: unpaired eigenvalue multiplicities");
            const std::vector<Vector>& other = itB->second;
            Mat<Cyclotomic> P(m, m);
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; j < m; ++j) P.at(i, j) = rs.form(basis[i], other[j]);
            auto Pinv = inverse(P);
            if (!Pinv) throw Error("eigenframe: degenerate pairing between dual eigenspaces");
            place(Cyclotomic::zeta(n, static_cast<long>(k)), basis, combine(other, *Pinv));
            place(Cyclotomic::zeta(n, static_cast<long>(kinv)), other,
                  combine(basis, transpose(*Pinv)));
            done.insert(k);
            done.insert(kinv);
        }
    }

    // The construction guarantees (u_i, w_j) = delta_{ij}; verify it anyway so
    // that any arithmetic defect surfaces here and not deep in a reduction.
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = 0; j < N; ++j) {
            Vector ui = fr.letter_vector(i), wj = fr.letter_vector(N + j);
            Cyclotomic want = i == j ? Cyclotomic(1) : Cyclotomic(0);
            if (rs.form(ui, wj) != want) throw Error("eigenframe: dual pairing check failed");
        }

    auto ui = inverse(fr.u_cols), wi = inverse(fr.w_cols);
    if (!ui || !wi) throw Error("eigenframe: singular eigenvector matrix");
    fr.u_inv = *ui;
    fr.w_inv = *wi;
    return fr;
}

// ---------------------------------------------------------------------------
// Full commutator of two degree-1 elements
// ---------------------------------------------------------------------------

LetterBracket letter_commutator(const AlgebraContext& ctx, const Letter& u, const Letter& v) {
    const RootSystem& rs = ctx.root_system();
    const GroupTable& gt = ctx.group();
    LetterBracket out;
    out.scalar = rs.form(u.c0, v.c1) - rs.form(u.c1, v.c0);
    out.reflections = ctx.zero();
    for (unsigned w : rs.reflection_pairs) {
        const Vector& root = rs.roots[w];
        Cyclotomic num = rs.form(u.c0, root) * rs.form(v.c1, root) -
                         rs.form(u.c1, root) * rs.form(v.c0, root);
        if (num.is_zero()) continue;
        Cyclotomic coeff = Cyclotomic(2) * num / rs.form(root, root);
        NuPoly c = NuPoly::variable(rs.nu_class_of_root[w], rs.num_nu_classes) * coeff;
        out.reflections += c * ctx.group_element(gt.reflection_element(w));
    }
    return out;
}

// ---------------------------------------------------------------------------
// KappaTrace
// ---------------------------------------------------------------------------

KappaTrace::KappaTrace(const AlgebraContext& ctx, int kappa, CentralFunction central,
                       std::uint64_t strategy_seed)
    : ctx_(&ctx), kappa_(kappa), central_(std::move(central)), seed_(strategy_seed) {
    if (kappa != 1 && kappa != -1) throw Error("kappa must be +1 or -1");
    if (central_.size() != ctx.group().classes().size())
        throw GlcViolation("central function has the wrong number of class values");
    GlcSystem sys = build_glc(ctx.group(), kappa);
    if (!satisfies(sys, central_))
        throw GlcViolation("central function violates the ground level conditions");
}

const EigenFrame& KappaTrace::frame(unsigned g) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = frames_.find(g);
        if (it != frames_.end()) return it->second;
    }
    EigenFrame fr = eigenframe(ctx_->group(), g);
    std::lock_guard<std::mutex> lock(mu_);
    return frames_.emplace(g, std::move(fr)).first->second;
}

NuPoly KappaTrace::evaluate(const AlgebraElement& x) const {
    if (x.context() != nullptr && x.context() != ctx_)
        throw SystemMismatch("element belongs to a different algebra than the trace");
    NuPoly out = NuPoly::zero(ctx_->nvars());
    for (const auto& [m, c] : x.terms()) out += c * evaluate_monomial(m);
    return out;
}

NuPoly KappaTrace::evaluate_monomial(const Monomial& m) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;
    }
    // The reduction strictly descends in (degree, kappa-eigenspace dimension),
    // so a monomial can never depend on itself; detect any violation instead
    // of recursing forever. Thread-local so concurrent evaluations of the same
    // monomial in different threads stay independent.
    static thread_local std::set<std::pair<const KappaTrace*, Monomial>> in_progress;
    auto key = std::make_pair(this, m);
    if (!in_progress.insert(key).second) throw Error("trace reduction failed to descend");
    NuPoly val;
    try {
        val = eval_uncached(m);
    } catch (...) {
        in_progress.erase(key);
        throw;
    }
    in_progress.erase(key);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(m, std::move(val)).first->second;
}

unsigned KappaTrace::pick(std::size_t options, const std::vector<unsigned>& word, unsigned g,
                          unsigned salt) const {
    if (options <= 1 || seed_ == 0) return 0;
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    };
    mix(seed_);
    mix(g);
    mix(salt);
    mix(word.size());
    for (unsigned x : word) mix(x + 1);
    return static_cast<unsigned>(h % options);
}

NuPoly KappaTrace::eval_uncached(const Monomial& m) const {
    unsigned nv = ctx_->nvars();
    unsigned deg = m.degree();
    if (deg % 2 == 1) return NuPoly::zero(nv);
    if (deg == 0) return central_[ctx_->group().class_of(m.g)];

    const EigenFrame& fr = frame(m.g);
    unsigned N = fr.dim();

    // The monomial is the ordered product of its generator letters; expand
    // each generator over the eigenframe of its group element:
    //   a_{0,k} = sum_i u_inv(i,k) b_{0,i},  a_{1,k} = sum_i w_inv(i,k) b_{1,i}.
    struct Slot {
        bool alpha1;
        unsigned k;
    };
    std::vector<Slot> slots;
    slots.reserve(deg);
    for (unsigned k = 0; k < N; ++k)
        for (unsigned r = 0; r < m.e0[k]; ++r) slots.push_back({false, k});
    for (unsigned k = 0; k < N; ++k)
        for (unsigned r = 0; r < m.e1[k]; ++r) slots.push_back({true, k});

    NuPoly total = NuPoly::zero(nv);
    std::vector<unsigned> word(slots.size(), 0);
    std::function<void(std::size_t, const Cyclotomic&)> expand =
        [&](std::size_t pos, const Cyclotomic& coeff) {
            if (pos == slots.size()) {
                total += eval_frame_word(word, m.g, fr) * coeff;
                return;
            }
            const Mat<Cyclotomic>& basis = slots[pos].alpha1 ? fr.w_inv : fr.u_inv;
            for (unsigned i = 0; i < N; ++i) {
                const Cyclotomic& c = basis.at(i, slots[pos].k);
                if (c.is_zero()) continue;
                word[pos] = slots[pos].alpha1 ? N + i : i;
                expand(pos + 1, coeff * c);
            }
        };
    expand(0, Cyclotomic(1));
    return total;
}

NuPoly KappaTrace::eval_frame_word(const std::vector<unsigned>& word, unsigned g,
                                   const EigenFrame& fr) const {
    const AlgebraContext& ctx = *ctx_;
    unsigned N = fr.dim();
    Cyclotomic kap(static_cast<long>(kappa_));
    AlgebraElement G = ctx.group_element(g);

    auto letter_elt = [&](unsigned I) { return ctx.letter_element(fr.letter(I)); };

    std::vector<unsigned> regular;
    for (unsigned s = 0; s < word.size(); ++s)
        if (fr.letter_lambda(word[s]) != kap) regular.push_back(s);

    if (!regular.empty()) {
        // Pull one letter with a non-kappa eigenvalue to the front, then trade
        // it for a commutator, which lowers the degree by two:
        //   str(P L S g) = str(L P S g) + str([P, L] S g)
        //   str(L B g)   = kappa lam / (1 - kappa lam) * str([B, L] g).
        unsigned s = regular[pick(regular.size(), word, g, 1)];
        AlgebraElement P = ctx.one(), S = ctx.one();
        for (unsigned t = 0; t < s; ++t) P = multiply(P, letter_elt(word[t]));
        for (unsigned t = s + 1; t < word.size(); ++t) S = multiply(S, letter_elt(word[t]));
        AlgebraElement L = letter_elt(word[s]);
        Cyclotomic kl = kap * fr.letter_lambda(word[s]);
        Cyclotomic fac = kl / (Cyclotomic(1) - kl);

        AlgebraElement PS = multiply(P, S);
        AlgebraElement front = multiply(PS, L) - multiply(L, PS);
        NuPoly out = evaluate(multiply(front, G)) * fac;
        if (s > 0) {
            AlgebraElement swap = multiply(multiply(P, L) - multiply(L, P), S);
            out += evaluate(multiply(swap, G));
        }
        return out;
    }

    // Special word: every letter has eigenvalue kappa, so no pull can lower
    // the degree. Anchor a symplectic pair (I, its partner J), reorder the
    // word as M' = b_I^p b_J^q L_1..L_r, and use the vanishing of
    // str([b_I M', b_J] g): the expansion of that commutator is
    // (p+1) C_{IJ} M' plus terms that each insert one reflection, and every
    // inserted reflection strictly lowers the kappa-eigenspace dimension of
    // the group element, so the recursion descends.
    std::vector<unsigned> order(word.size());
    for (unsigned i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](unsigned a, unsigned b) { return word[a] < word[b]; });
    unsigned anchor = order[pick(order.size(), word, g, 2)];
    unsigned I = word[anchor];
    unsigned J = fr.letter_partner(I);
    Cyclotomic cIJ(I < N ? 1L : -1L);

    auto key = [&](unsigned x) -> unsigned { return x == I ? 0u : (x == J ? 1u : 2u + x); };
    std::vector<unsigned> sorted = word;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](unsigned a, unsigned b) { return key(a) < key(b); });
    unsigned p = static_cast<unsigned>(std::count(sorted.begin(), sorted.end(), I));

    AlgebraElement Mp = ctx.one();
    for (unsigned idx : sorted) Mp = multiply(Mp, letter_elt(idx));

    AlgebraElement BI = letter_elt(I), BJ = letter_elt(J);
    AlgebraElement BIM = multiply(BI, Mp);
    AlgebraElement comm = multiply(BIM, BJ) - multiply(BJ, BIM);
    Cyclotomic lead = Cyclotomic(static_cast<long>(p + 1)) * cIJ;
    AlgebraElement xi = comm - Mp * NuPoly(lead);
    NuPoly out = evaluate(multiply(xi, G)) * (-lead.inverse());

    // Residue of the reordering: same letter multiset, strictly lower degree.
    if (sorted != word) {
        AlgebraElement W = ctx.one();
        for (unsigned idx : word) W = multiply(W, letter_elt(idx));
        out += evaluate(multiply(W - Mp, G));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Axiom verification on random samples
// ---------------------------------------------------------------------------

namespace {

AlgebraElement random_element(const AlgebraContext& ctx, std::mt19937_64& rng,
                              unsigned max_degree) {
    unsigned N = ctx.dim();
    unsigned W = ctx.group().size();
    AlgebraElement out = ctx.zero();
    unsigned terms = 1 + static_cast<unsigned>(rng() % 3);
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m;
        m.e0.assign(N, 0);
        m.e1.assign(N, 0);
        m.g = static_cast<unsigned>(rng() % W);
        unsigned d = static_cast<unsigned>(rng() % (max_degree + 1));
        for (unsigned b = 0; b < d && N > 0; ++b) {
            unsigned slot = static_cast<unsigned>(rng() % (2 * N));
            if (slot < N)
                ++m.e0[slot];
            else
                ++m.e1[slot - N];
        }
        long c = static_cast<long>(rng() % 9) - 4;
        if (c == 0) c = 1;
        out += ctx.monomial_element(m, NuPoly(c));
    }
    return out;
}

}  // namespace

TraceReport verify_trace_property(const KappaTrace& tr, unsigned pairs, unsigned max_degree,
                                  std::uint64_t seed) {
    const AlgebraContext& ctx = tr.context();
    std::mt19937_64 rng(seed);
    TraceReport rep;
    for (unsigned t = 0; t < pairs; ++t) {
        AlgebraElement f = random_element(ctx, rng, max_degree);
        AlgebraElement h = random_element(ctx, rng, max_degree);
        NuPoly bracket = tr.evaluate(kappa_bracket(f, h, tr.kappa()));
        ++rep.checked;
        if (!bracket.is_zero()) {
            ++rep.violations;
            if (rep.first_failure.empty())
                rep.first_failure = "nonzero bracket trace at sample " + std::to_string(t);
        }
        unsigned tau = static_cast<unsigned>(rng() % ctx.group().size());
        NuPoly drift = tr.evaluate(conjugate(f, tau)) - tr.evaluate(f);
        ++rep.checked;
        if (!drift.is_zero()) {
            ++rep.violations;
            if (rep.first_failure.empty())
                rep.first_failure = "conjugation drift at sample " + std::to_string(t);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Zero-coupling closed form: quasi-free pair contractions
// ---------------------------------------------------------------------------

Cyclotomic nu0_oracle(const AlgebraContext& ctx, int kappa,
                      const std::vector<Cyclotomic>& central0, unsigned g,
                      const std::vector<unsigned>& e0, const std::vector<unsigned>& e1) {
    const GroupTable& gt = ctx.group();
    unsigned N = ctx.dim();
    if (e0.size() != N || e1.size() != N)
        throw VariableMismatch("exponent vectors must have one entry per dimension");
    if (central0.size() != gt.classes().size())
        throw VariableMismatch("central0 must have one value per conjugacy class");
    unsigned deg = 0;
    for (unsigned k = 0; k < N; ++k) deg += e0[k] + e1[k];
    Cyclotomic base = central0[gt.class_of(g)];
    if (deg == 0) return base;
    if (deg % 2 == 1) return Cyclotomic(0);
    if (gt.eigen_multiplicity(g, kappa) != 0) return Cyclotomic(0);

    EigenFrame fr = eigenframe(gt, g);
    Cyclotomic kap(static_cast<long>(kappa));

    // Position-ordered contraction of two frame letters:
    //   <b_X b_Y> = kappa lam_X / (1 - kappa lam_X) * C_{Y X},
    // with C the symplectic pairing C_{(0,i)(1,i)} = 1 = -C_{(1,i)(0,i)}.
    auto kernel = [&](unsigned X, unsigned Y) -> Cyclotomic {
        Cyclotomic cYX;
        if (X < N && Y == X + N)
            cYX = Cyclotomic(-1);
        else if (X >= N && Y == X - N)
            cYX = Cyclotomic(1);
        else
            return Cyclotomic(0);
        Cyclotomic kl = kap * fr.letter_lambda(X);
        if (kl == Cyclotomic(1))
            throw EigenvalueKappaPresent("contraction kernel undefined on a kappa eigenvalue");
        return kl / (Cyclotomic(1) - kl) * cYX;
    };

    // Sum over perfect matchings: the first letter contracts against each
    // later one in turn. Scalar contractions commute past the remaining
    // letters, so no reordering terms arise at zero coupling.
    std::function<Cyclotomic(const std::vector<unsigned>&)> wick =
        [&](const std::vector<unsigned>& w) -> Cyclotomic {
        if (w.empty()) return Cyclotomic(1);
        Cyclotomic acc(0);
        for (std::size_t s = 1; s < w.size(); ++s) {
            Cyclotomic k2 = kernel(w[0], w[s]);
            if (k2.is_zero()) continue;
            std::vector<unsigned> rest;
            rest.reserve(w.size() - 2);
            for (std::size_t t = 1; t < w.size(); ++t)
                if (t != s) rest.push_back(w[t]);
            acc += k2 * wick(rest);
        }
        return acc;
    };

    struct Slot {
        bool alpha1;
        unsigned k;
    };
    std::vector<Slot> slots;
    for (unsigned k = 0; k < N; ++k)
        for (unsigned r = 0; r < e0[k]; ++r) slots.push_back({false, k});
    for (unsigned k = 0; k < N; ++k)
        for (unsigned r = 0; r < e1[k]; ++r) slots.push_back({true, k});

    Cyclotomic total(0);
    std::vector<unsigned> word(slots.size(), 0);
    std::function<void(std::size_t, const Cyclotomic&)> expand =
        [&](std::size_t pos, const Cyclotomic& coeff) {
            if (pos == slots.size()) {
                total += coeff * wick(word);
                return;
            }
            const Mat<Cyclotomic>& basis = slots[pos].alpha1 ? fr.w_inv : fr.u_inv;
            for (unsigned i = 0; i < N; ++i) {
                const Cyclotomic& c = basis.at(i, slots[pos].k);
                if (c.is_zero()) continue;
                word[pos] = slots[pos].alpha1 ? N + i : i;
                expand(pos + 1, coeff * c);
            }
        };
    expand(0, Cyclotomic(1));
    return total * base;
}

// ---------------------------------------------------------------------------
// Gram matrix of (f, h) -> trace(f h) on the monomial basis
// ---------------------------------------------------------------------------

GramReport bilinear_gram(const KappaTrace& tr, unsigned max_degree,
                         const std::vector<Cyclotomic>& nu) {
    const AlgebraContext& ctx = tr.context();
    unsigned N = ctx.dim();
    unsigned W = ctx.group().size();

    std::vector<std::pair<std::vector<std::uint16_t>, std::vector<std::uint16_t>>> exps;
    std::vector<std::uint16_t> e(2 * N, 0);
    std::function<void(unsigned, unsigned)> gen = [&](unsigned slot, unsigned left) {
        if (slot == 2 * N) {
            exps.emplace_back(std::vector<std::uint16_t>(e.begin(), e.begin() + N),
                              std::vector<std::uint16_t>(e.begin() + N, e.end()));
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            e[slot] = static_cast<std::uint16_t>(v);
            gen(slot + 1, left - v);
        }
        e[slot] = 0;
    };
    if (N == 0)
        exps.emplace_back(std::vector<std::uint16_t>{}, std::vector<std::uint16_t>{});
    else
        gen(0, max_degree);

    GramReport rep;
    for (const auto& [e0, e1] : exps)
        for (unsigned g = 0; g < W; ++g) rep.basis.push_back(Monomial{e0, e1, g});

    unsigned n = static_cast<unsigned>(rep.basis.size());
    rep.gram = Mat<Cyclotomic>(n, n);
    for (unsigned i = 0; i < n; ++i) {
        AlgebraElement bi = ctx.monomial_element(rep.basis[i], NuPoly(1));
        for (unsigned j = 0; j < n; ++j) {
            AlgebraElement bj = ctx.monomial_element(rep.basis[j], NuPoly(1));
            rep.gram.at(i, j) = tr.evaluate(multiply(bi, bj)).evaluate(nu);
        }
    }
    rep.rank = rank(rep.gram);
    return rep;
}

}  // namespace calogero
