#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "calogero/algebra.hpp"
#include "calogero/coxgroup.hpp"
#include "calogero/errors.hpp"
#include "calogero/glc.hpp"
#include "calogero/rootsystem.hpp"
#include "calogero/traceval.hpp"
#include "doctest.h"

using namespace calogero;

namespace {

NuPoly nu_var(const AlgebraContext& ctx, unsigned k = 0) {
    return NuPoly::variable(k, ctx.nvars());
}

std::vector<Cyclotomic> zero_nu(const AlgebraContext& ctx) {
    return std::vector<Cyclotomic>(ctx.nvars(), Cyclotomic(0));
}

AlgebraElement random_element(const AlgebraContext& ctx, std::mt19937_64& rng,
                              unsigned max_degree, bool force_even = false) {
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
        if (force_even && d % 2 == 1) d = d - 1;
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

// All exponent pairs (e0, e1) with total degree <= d over N+N slots.
std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> all_exponents(unsigned N,
                                                                                   unsigned d) {
    std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> out;
    std::vector<unsigned> e(2 * N, 0);
    std::function<void(unsigned, unsigned)> gen = [&](unsigned slot, unsigned left) {
        if (slot == 2 * N) {
            out.emplace_back(std::vector<unsigned>(e.begin(), e.begin() + N),
                             std::vector<unsigned>(e.begin() + N, e.end()));
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            e[slot] = v;
            gen(slot + 1, left - v);
        }
        e[slot] = 0;
    };
    if (N == 0)
        out.emplace_back(std::vector<unsigned>{}, std::vector<unsigned>{});
    else
        gen(0, d);
    return out;
}

Monomial to_monomial(const std::pair<std::vector<unsigned>, std::vector<unsigned>>& e,
                     unsigned g) {
    Monomial m;
    m.e0.assign(e.first.begin(), e.first.end());
    m.e1.assign(e.second.begin(), e.second.end());
    m.g = g;
    return m;
}

}  // namespace

TEST_CASE("eigenframe diagonalizes exactly with a normalized dual pairing") {
    for (const char* name : {"A1", "A2", "B2", "I2(5)", "G2"}) {
        CAPTURE(name);
        GroupTable gt(build(name));
        const RootSystem& rs = gt.root_system();
        unsigned N = rs.rank;
        for (unsigned g = 0; g < gt.size(); ++g) {
            EigenFrame fr = eigenframe(gt, g);
            REQUIRE(fr.dim() == N);
            const Mat<Cyclotomic>& M = gt.matrix(g);
            for (unsigned i = 0; i < N; ++i) {
                Vector u = fr.letter_vector(i);
                Vector w = fr.letter_vector(N + i);
                Vector mu = mat_apply(M, u), mw = mat_apply(M, w);
                Cyclotomic lam = fr.lambda[i];
                Cyclotomic lami = lam.inverse();
                for (unsigned r = 0; r < N; ++r) {
                    CHECK(mu[r] == lam * u[r]);
                    CHECK(mw[r] == lami * w[r]);
                }
                for (unsigned j = 0; j < N; ++j) {
                    Cyclotomic want = i == j ? Cyclotomic(1) : Cyclotomic(0);
                    CHECK(rs.form(u, fr.letter_vector(N + j)) == want);
                }
            }
            // Eigenvalue multiplicities at +-1 match the group table's count.
            for (int kappa : {+1, -1}) {
                unsigned hits = 0;
                for (unsigned i = 0; i < N; ++i)
                    if (fr.lambda[i] == Cyclotomic(kappa)) ++hits;
                CHECK(hits == gt.eigen_multiplicity(g, kappa));
            }
        }
    }
}

TEST_CASE("eigenframe of a fourfold rotation has primitive fourth roots") {
    GroupTable gt(build("B2"));
    bool found = false;
    for (unsigned g = 0; g < gt.size() && !found; ++g) {
        if (gt.order_of(g) != 4) continue;
        EigenFrame fr = eigenframe(gt, g);
        for (const Cyclotomic& lam : fr.lambda) {
            CHECK(lam * lam == Cyclotomic(-1));
        }
        found = true;
    }
    CHECK(found);
}

TEST_CASE("letter_commutator matches the generator pair table") {
    GroupTable gt(build("B2"));
    AlgebraContext ctx(gt);
    unsigned N = ctx.dim();
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = 0; j < N; ++j) {
            Letter u{Vector(N, Cyclotomic(0)), Vector(N, Cyclotomic(0))};
            Letter v{Vector(N, Cyclotomic(0)), Vector(N, Cyclotomic(0))};
            u.c0[i] = Cyclotomic(1);
            v.c1[j] = Cyclotomic(1);
            LetterBracket lb = letter_commutator(ctx, u, v);
            AlgebraElement full = ctx.scalar(NuPoly(lb.scalar)) + lb.reflections;
            CHECK(full == ctx.pair_commutator(i, j));
            // Same-copy letters commute exactly.
            Letter u2{u.c0, Vector(N, Cyclotomic(0))};
            Letter v2{v.c1, Vector(N, Cyclotomic(0))};
            LetterBracket same = letter_commutator(ctx, u2, v2);
            CHECK(same.scalar == Cyclotomic(0));
            CHECK(same.reflections.is_zero());
        }
}

TEST_CASE("reflections in a kappa-letter bracket lower the eigenspace dimension") {
    for (const char* name : {"A2", "B2"}) {
        CAPTURE(name);
        GroupTable gt(build(name));
        AlgebraContext ctx(gt);
        unsigned N = ctx.dim();
        for (int kappa : {+1, -1}) {
            for (const ConjClass& cls : gt.classes()) {
                unsigned g = cls.representative;
                unsigned E = gt.eigen_multiplicity(g, kappa);
                if (E == 0) continue;
                EigenFrame fr = eigenframe(gt, g);
                std::vector<unsigned> kappa_letters;
                for (unsigned I = 0; I < 2 * N; ++I)
                    if (fr.letter_lambda(I) == Cyclotomic(kappa)) kappa_letters.push_back(I);
                CHECK(kappa_letters.size() == 2 * E);
                for (unsigned X : kappa_letters)
                    for (unsigned Y : kappa_letters) {
                        LetterBracket lb =
                            letter_commutator(ctx, fr.letter(X), fr.letter(Y));
                        for (const auto& [m, c] : lb.reflections.terms()) {
                            unsigned moved = gt.product(m.g, g);
                            CHECK(gt.eigen_multiplicity(moved, kappa) == E - 1);
                        }
                    }
            }
        }
    }
}

TEST_CASE("A1 supertrace hand values") {
    GroupTable gt(build("A1"));
    const RootSystem& rs = gt.root_system();
    AlgebraContext ctx(gt);
    auto basis = solution_basis(gt, -1);
    REQUIRE(basis.size() == 1);
    KappaTrace tr(ctx, -1, basis[0]);

    NuPoly nu = nu_var(ctx);
    unsigned refl = gt.reflection_element(rs.reflection_pairs[0]);
    AlgebraElement R = ctx.group_element(refl);
    AlgebraElement a0 = ctx.generator(0, 0), a1 = ctx.generator(1, 0);

    CHECK(tr.evaluate(ctx.one()) == NuPoly(1));
    CHECK(tr.evaluate(R) == nu * Cyclotomic(-2));
    // str(a0 a1) = 1/2 - 2 nu^2 and str(a1 a0) = str(a0 a1) - str([a0, a1]).
    NuPoly half(Cyclotomic(make_rational(1, 2)));
    CHECK(tr.evaluate(a0 * a1) == half - nu * nu * Cyclotomic(2));
    CHECK(tr.evaluate(a1 * a0) == -half + nu * nu * Cyclotomic(2));
    // A kappa-eigenvalue word over the reflection: the special step applies
    // and everything cancels.
    CHECK(tr.evaluate(a0 * a1 * R) == NuPoly::zero(1));
    CHECK(tr.evaluate(a1 * a0 * R) == NuPoly::zero(1));
}

TEST_CASE("A1 trace hand values") {
    GroupTable gt(build("A1"));
    const RootSystem& rs = gt.root_system();
    AlgebraContext ctx(gt);
    auto basis = solution_basis(gt, +1);
    REQUIRE(basis.size() == 1);
    KappaTrace tr(ctx, +1, basis[0]);

    NuPoly nu = nu_var(ctx);
    unsigned refl = gt.reflection_element(rs.reflection_pairs[0]);
    AlgebraElement R = ctx.group_element(refl);
    AlgebraElement a0 = ctx.generator(0, 0), a1 = ctx.generator(1, 0);

    // The basis solution is normalized at the reflection class.
    CHECK(tr.evaluate(R) == NuPoly(1));
    CHECK(tr.evaluate(ctx.one()) == nu * Cyclotomic(-2));
    // Both degree-2 values follow by one reduction step each:
    // tr(a0 a1) = 0 (special step over the identity), and
    // tr(a0 a1 R) = 1/2 (tr(R) + 2 nu tr(1)) = 1/2 - 2 nu^2.
    NuPoly half(Cyclotomic(make_rational(1, 2)));
    CHECK(tr.evaluate(a0 * a1) == NuPoly::zero(1));
    CHECK(tr.evaluate(a0 * a1 * R) == half - nu * nu * Cyclotomic(2));
}

TEST_CASE("trace is linear and kills odd monomials") {
    GroupTable gt(build("B2"));
    AlgebraContext ctx(gt);
    auto basis = solution_basis(gt, -1);
    REQUIRE(basis.size() == 2);
    KappaTrace tr(ctx, -1, basis[0]);

    std::mt19937_64 rng(71);
    for (unsigned t = 0; t < 40; ++t) {
        Monomial m;
        m.e0.assign(2, 0);
        m.e1.assign(2, 0);
        m.g = static_cast<unsigned>(rng() % gt.size());
        unsigned d = 1 + 2 * static_cast<unsigned>(rng() % 3);  // odd degree
        for (unsigned b = 0; b < d; ++b) {
            unsigned slot = static_cast<unsigned>(rng() % 4);
            if (slot < 2)
                ++m.e0[slot];
            else
                ++m.e1[slot - 2];
        }
        CHECK(tr.evaluate_monomial(m).is_zero());
    }

    for (unsigned t = 0; t < 5; ++t) {
        AlgebraElement x = random_element(ctx, rng, 3);
        AlgebraElement y = random_element(ctx, rng, 3);
        NuPoly lhs = tr.evaluate(x * NuPoly(2) + y * NuPoly(-3));
        CHECK(lhs == tr.evaluate(x) * Cyclotomic(2) - tr.evaluate(y) * Cyclotomic(3));
    }
}

TEST_CASE("degree zero evaluations read the central function") {
    GroupTable gt(build("A2"));
    AlgebraContext ctx(gt);
    for (int kappa : {+1, -1}) {
        for (const CentralFunction& f : solution_basis(gt, kappa)) {
            KappaTrace tr(ctx, kappa, f);
            for (unsigned g = 0; g < gt.size(); ++g)
                CHECK(tr.evaluate(ctx.group_element(g)) == f[gt.class_of(g)]);
        }
    }
}

TEST_CASE("constructor rejects non-solutions and foreign elements") {
    GroupTable gt(build("A1"));
    AlgebraContext ctx(gt);
    CentralFunction bogus(gt.classes().size(), NuPoly(1));
    CHECK_THROWS_AS(KappaTrace(ctx, -1, bogus), GlcViolation);
    CHECK_THROWS_AS(KappaTrace(ctx, -1, CentralFunction{}), GlcViolation);
    CHECK_THROWS_AS(KappaTrace(ctx, 2, solution_basis(gt, -1)[0]), Error);

    KappaTrace tr(ctx, -1, solution_basis(gt, -1)[0]);
    GroupTable gt2(build("A2"));
    AlgebraContext ctx2(gt2);
    CHECK_THROWS_AS(tr.evaluate(ctx2.one()), SystemMismatch);
}

TEST_CASE("defining axioms hold on random samples") {
    struct Cfg {
        const char* name;
        unsigned pairs;
    };
    for (const Cfg& cfg : {Cfg{"A1", 12}, Cfg{"A2", 8}, Cfg{"B2", 6}, Cfg{"I2(5)", 4}}) {
        CAPTURE(cfg.name);
        GroupTable gt(build(cfg.name));
        AlgebraContext ctx(gt);
        for (int kappa : {+1, -1}) {
            CAPTURE(kappa);
            auto basis = solution_basis(gt, kappa);
            REQUIRE(!basis.empty());
            KappaTrace tr(ctx, kappa, basis[0]);
            TraceReport rep = verify_trace_property(tr, cfg.pairs, 3, 1000 + kappa);
            CHECK(rep.violations == 0);
            CHECK(rep.checked == 2 * cfg.pairs);
        }
    }
}

TEST_CASE("every reduction strategy returns the same values") {
    for (const char* name : {"A1", "A2", "B2"}) {
        CAPTURE(name);
        GroupTable gt(build(name));
        AlgebraContext ctx(gt);
        auto basis = solution_basis(gt, -1);
        std::vector<std::unique_ptr<KappaTrace>> traces;
        for (std::uint64_t seed : {0ull, 1ull, 2ull, 3ull, 17ull})
            traces.push_back(std::make_unique<KappaTrace>(ctx, -1, basis[0], seed));
        std::mt19937_64 rng(5);
        for (unsigned t = 0; t < 8; ++t) {
            AlgebraElement x = random_element(ctx, rng, 4, /*force_even=*/true);
            NuPoly ref = traces[0]->evaluate(x);
            for (std::size_t s = 1; s < traces.size(); ++s)
                CHECK(traces[s]->evaluate(x) == ref);
        }
    }
}

TEST_CASE("zero-coupling values match the pair-contraction closed form") {
    for (const char* name : {"A1", "A2", "B2"}) {
        CAPTURE(name);
        GroupTable gt(build(name));
        AlgebraContext ctx(gt);
        unsigned N = ctx.dim();
        auto exps = all_exponents(N, 4);
        for (int kappa : {+1, -1}) {
            CAPTURE(kappa);
            auto basis = solution_basis(gt, kappa);
            KappaTrace tr(ctx, kappa, basis[0]);
            std::vector<Cyclotomic> central0 = evaluate_central(basis[0], zero_nu(ctx));
            for (const auto& e : exps) {
                for (unsigned g = 0; g < gt.size(); ++g) {
                    Cyclotomic got =
                        tr.evaluate_monomial(to_monomial(e, g)).evaluate(zero_nu(ctx));
                    Cyclotomic want = nu0_oracle(ctx, kappa, central0, g, e.first, e.second);
                    CHECK(got == want);
                }
            }
        }
    }
}

TEST_CASE("nu0_oracle validates its inputs") {
    GroupTable gt(build("A2"));
    AlgebraContext ctx(gt);
    std::vector<Cyclotomic> central0(gt.classes().size(), Cyclotomic(1));
    CHECK_THROWS_AS(nu0_oracle(ctx, -1, central0, 0, {0}, {0, 0}), VariableMismatch);
    CHECK_THROWS_AS(nu0_oracle(ctx, -1, {Cyclotomic(1)}, 0, {0, 0}, {0, 0}), VariableMismatch);
}

TEST_CASE("the Klein element carries supertraces to traces") {
    GroupTable gt(build("B2"));
    AlgebraContext ctx(gt);
    REQUIRE(gt.has_minus_identity());
    AlgebraElement K = ctx.group_element(gt.minus_identity_id());
    auto sbasis = solution_basis(gt, -1);
    std::mt19937_64 rng(23);
    for (const CentralFunction& S : sbasis) {
        KappaTrace str_tr(ctx, -1, S);
        KappaTrace tr_tr(ctx, +1, klein_transport(S, gt));
        for (unsigned t = 0; t < 6; ++t) {
            AlgebraElement x = random_element(ctx, rng, 4, /*force_even=*/true);
            CHECK(tr_tr.evaluate(x) == str_tr.evaluate(x * K));
        }
    }
}

TEST_CASE("A1 supertrace Gram matrix: full rank at nu=1/5, degenerate at nu=1/2") {
    GroupTable gt(build("A1"));
    AlgebraContext ctx(gt);
    KappaTrace tr(ctx, -1, solution_basis(gt, -1)[0]);

    GramReport fifth = bilinear_gram(tr, 3, {Cyclotomic(make_rational(1, 5))});
    REQUIRE(fifth.basis.size() == 20);
    CHECK(fifth.rank == 20);

    GramReport half = bilinear_gram(tr, 3, {Cyclotomic(make_rational(1, 2))});
    CHECK(half.rank < 20);
}
