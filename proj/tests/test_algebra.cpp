#include "calogero/algebra.hpp"

#include <random>
#include <string>
#include <vector>

#include "calogero/coxgroup.hpp"
#include "calogero/errors.hpp"
#include "calogero/rootsystem.hpp"
#include "doctest.h"

using namespace calogero;

namespace {

Monomial unit_monomial(unsigned n, unsigned g = 0) {
    return Monomial{std::vector<std::uint16_t>(n, 0), std::vector<std::uint16_t>(n, 0), g};
}

AlgebraElement random_element(const AlgebraContext& ctx, std::mt19937_64& rng, unsigned max_degree,
                              unsigned num_terms, bool force_even = false) {
    std::uniform_int_distribution<unsigned> pick_deg(0, max_degree);
    std::uniform_int_distribution<unsigned> pick_slot(0, 2 * ctx.dim() - 1);
    std::uniform_int_distribution<unsigned> pick_g(0, ctx.group().size() - 1);
    std::uniform_int_distribution<long> pick_c(-4, 4);
    AlgebraElement out = ctx.zero();
    for (unsigned t = 0; t < num_terms; ++t) {
        unsigned deg = pick_deg(rng);
        if (force_even && deg % 2 == 1) deg = (deg + 1 <= max_degree) ? deg + 1 : deg - 1;
        Monomial m = unit_monomial(ctx.dim(), pick_g(rng));
        for (unsigned d = 0; d < deg; ++d) {
            unsigned slot = pick_slot(rng);
            ++(slot < ctx.dim() ? m.e0[slot] : m.e1[slot - ctx.dim()]);
        }
        long c = pick_c(rng);
        if (c == 0) c = 1;
        out += ctx.monomial_element(m, NuPoly(Cyclotomic(c), ctx.nvars()));
    }
    return out;
}

NuPoly nu_const(long c, unsigned nvars) { return NuPoly(Cyclotomic(c), nvars); }

}  // namespace

TEST_CASE("rank-one reordering produces the commutator correction") {
    GroupTable gt(build("A1"));
    AlgebraContext ctx(gt);
    unsigned r = gt.reflection_element(gt.root_system().reflection_pairs[0]);

    AlgebraElement prod = ctx.generator(1, 0) * ctx.generator(0, 0);

    Monomial m_a0a1 = unit_monomial(1);
    m_a0a1.e0[0] = 1;
    m_a0a1.e1[0] = 1;
    AlgebraElement expect = ctx.monomial_element(m_a0a1, nu_const(1, 1)) - ctx.one() -
                            NuPoly::variable(0, 1) * nu_const(2, 1) * ctx.group_element(r);
    CHECK(prod == expect);
}

TEST_CASE("group elements conjugate generators as vectors") {
    GroupTable gt(build("B2"));  // orthonormal Gram
    AlgebraContext ctx(gt);
    const RootSystem& rs = gt.root_system();
    for (unsigned w : rs.reflection_pairs) {
        unsigned rid = gt.reflection_element(w);
        const Vector& v = rs.roots[w];
        Cyclotomic vv = rs.form(v, v);
        for (unsigned alpha : {0u, 1u}) {
            for (unsigned i = 0; i < 2; ++i) {
                CAPTURE(w);
                CAPTURE(alpha);
                CAPTURE(i);
                AlgebraElement lhs = ctx.group_element(rid) * ctx.generator(alpha, i);
                AlgebraElement rhs = ctx.zero();
                for (unsigned j = 0; j < 2; ++j) {
                    Cyclotomic coeff((i == j) ? 1 : 0);
                    coeff -= Cyclotomic(2) * v[i] * v[j] / vv;
                    if (coeff.is_zero()) continue;
                    rhs += NuPoly(coeff) * (ctx.generator(alpha, j) * ctx.group_element(rid));
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("one is a two-sided unit") {
    GroupTable gt(build("A2"));
    AlgebraContext ctx(gt);
    std::mt19937_64 rng(77);
    for (int t = 0; t < 10; ++t) {
        AlgebraElement x = random_element(ctx, rng, 3, 3);
        CHECK(ctx.one() * x == x);
        CHECK(x * ctx.one() == x);
    }
}

TEST_CASE("generator-pair brackets match the precomputed table") {
    for (const auto& name : {"A1", "A2", "B2"}) {
        CAPTURE(name);
        GroupTable gt(build(name));
        AlgebraContext ctx(gt);
        for (unsigned i = 0; i < ctx.dim(); ++i)
            for (unsigned j = 0; j < ctx.dim(); ++j)
                CHECK(kappa_bracket(ctx.generator(0, i), ctx.generator(1, j), +1) ==
                      ctx.pair_commutator(i, j));
    }
}

TEST_CASE("supercommutator of an odd generator with itself doubles the square") {
    GroupTable gt(build("A1"));
    AlgebraContext ctx(gt);
    AlgebraElement a = ctx.generator(0, 0);
    Monomial sq = unit_monomial(1);
    sq.e0[0] = 2;
    CHECK(kappa_bracket(a, a, -1) == ctx.monomial_element(sq, nu_const(2, 1)));
    CHECK(kappa_bracket(a, a, +1).is_zero());
}

TEST_CASE("same-alpha generators commute and the zero-coupling bracket is the Gram form") {
    for (const auto& name : {"A2", "B2"}) {
        CAPTURE(name);
        GroupTable gt(build(name));
        AlgebraContext ctx(gt);
        const RootSystem& rs = gt.root_system();
        std::vector<Cyclotomic> nu0(ctx.nvars(), Cyclotomic(0));
        for (unsigned i = 0; i < ctx.dim(); ++i) {
            for (unsigned j = 0; j < ctx.dim(); ++j) {
                CAPTURE(i);
                CAPTURE(j);
                CHECK(kappa_bracket(ctx.generator(0, i), ctx.generator(0, j), +1).is_zero());
                CHECK(kappa_bracket(ctx.generator(1, i), ctx.generator(1, j), +1).is_zero());
                AlgebraElement br = kappa_bracket(ctx.generator(0, i), ctx.generator(1, j), +1);
                // at nu = 0 only the scalar Gram entry survives
                AlgebraElement at0 = ctx.zero();
                for (const auto& [m, c] : br.terms()) {
                    Cyclotomic val = c.evaluate(nu0);
                    if (!val.is_zero()) at0 += ctx.monomial_element(m, NuPoly(val, ctx.nvars()));
                }
                CHECK(at0 == ctx.scalar(NuPoly(rs.gram.at(i, j), ctx.nvars())));
            }
        }
    }
}

TEST_CASE("the group algebra embeds multiplicatively") {
    for (const auto& name : {"A2", "B2", "I2(5)"}) {
        CAPTURE(name);
        GroupTable gt(build(name));
        AlgebraContext ctx(gt);
        std::mt19937_64 rng(1234);
        std::uniform_int_distribution<unsigned> pick(0, gt.size() - 1);
        for (int t = 0; t < 30; ++t) {
            unsigned g = pick(rng), h = pick(rng);
            CHECK(ctx.group_element(g) * ctx.group_element(h) ==
                  ctx.group_element(gt.product(g, h)));
        }
    }
}

TEST_CASE("multiplication is associative") {
    std::mt19937_64 rng(0xa550cULL);
    for (const auto& name : {"A1", "A2", "B2", "I2(5)"}) {
        CAPTURE(name);
        GroupTable gt(build(name));
        AlgebraContext ctx(gt);
        for (int t = 0; t < 200; ++t) {
            CAPTURE(t);
            AlgebraElement x = random_element(ctx, rng, 3, 2);
            AlgebraElement y = random_element(ctx, rng, 3, 2);
            AlgebraElement z = random_element(ctx, rng, 3, 2);
            CHECK((x * y) * z == x * (y * z));
        }
    }
}

TEST_CASE("the commutator satisfies the Jacobi identity") {
    std::mt19937_64 rng(0x1acc0bULL);
    for (const auto& name : {"A1", "B2"}) {
        CAPTURE(name);
        GroupTable gt(build(name));
        AlgebraContext ctx(gt);
        for (int t = 0; t < 20; ++t) {
            CAPTURE(t);
            AlgebraElement x = random_element(ctx, rng, 2, 2, /*force_even=*/true);
            AlgebraElement y = random_element(ctx, rng, 2, 2, /*force_even=*/true);
            AlgebraElement z = random_element(ctx, rng, 2, 2, /*force_even=*/true);
            AlgebraElement jac = kappa_bracket(x, kappa_bracket(y, z, +1), +1) +
                                 kappa_bracket(y, kappa_bracket(z, x, +1), +1) +
                                 kappa_bracket(z, kappa_bracket(x, y, +1), +1);
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("parity classification and multiplicativity") {
    GroupTable gt(build("A2"));
    AlgebraContext ctx(gt);
    std::uniform_int_distribution<unsigned> pick_g(0, gt.size() - 1);
    std::mt19937_64 rng(5);

    AlgebraElement odd = ctx.generator(0, 0) * ctx.group_element(pick_g(rng));
    CHECK(odd.parity() == Parity::odd);
    AlgebraElement even = ctx.generator(0, 0) * ctx.generator(1, 0);
    CHECK(even.parity() == Parity::even);
    CHECK((ctx.generator(0, 0) + ctx.one()).parity() == Parity::mixed);
    CHECK(ctx.zero().parity() == Parity::even);

    for (int t = 0; t < 12; ++t) {
        AlgebraElement x = random_element(ctx, rng, 3, 2);
        AlgebraElement y = random_element(ctx, rng, 3, 2);
        for (const AlgebraElement* xp : {&x, &y}) {
            (void)xp;
        }
        AlgebraElement xo = x.odd_part(), ye = y.even_part();
        if (!xo.is_zero() && !ye.is_zero()) {
            AlgebraElement p = xo * ye;
            if (!p.is_zero()) CHECK(p.parity() == Parity::odd);
        }
        AlgebraElement xe = x.even_part();
        if (!xe.is_zero() && !ye.is_zero()) {
            AlgebraElement p = xe * ye;
            if (!p.is_zero()) CHECK(p.parity() == Parity::even);
        }
    }
}

TEST_CASE("ladder operators satisfy the expected brackets") {
    for (const auto& name : {"A1", "A2", "B2"}) {
        CAPTURE(name);
        GroupTable gt(build(name));
        AlgebraContext ctx(gt);
        AlgebraElement t01 = sl2_generator(ctx, 0, 1);
        for (unsigned i = 0; i < ctx.dim(); ++i) {
            CAPTURE(i);
            CHECK(kappa_bracket(t01, ctx.generator(0, i), +1) == -ctx.generator(0, i));
            CHECK(kappa_bracket(t01, ctx.generator(1, i), +1) == ctx.generator(1, i));
        }
        for (unsigned w : gt.root_system().reflection_pairs) {
            AlgebraElement rv = ctx.group_element(gt.reflection_element(w));
            CHECK(kappa_bracket(t01, rv, +1).is_zero());
        }
        AlgebraElement t00 = sl2_generator(ctx, 0, 0);
        AlgebraElement t11 = sl2_generator(ctx, 1, 1);
        AlgebraElement four_t01 = nu_const(4, ctx.nvars()) * t01;
        CHECK(kappa_bracket(t00, t11, +1) == four_t01);
    }
}

TEST_CASE("letter elements expand to coordinate combinations") {
    GroupTable gt(build("B2"));
    AlgebraContext ctx(gt);
    Letter l{{Cyclotomic(2), Cyclotomic(-1)}, {Cyclotomic(0), Cyclotomic(3)}};
    AlgebraElement expect = nu_const(2, 2) * ctx.generator(0, 0) -
                            ctx.generator(0, 1) + nu_const(3, 2) * ctx.generator(1, 1);
    CHECK(ctx.letter_element(l) == expect);
}

TEST_CASE("exceeding the degree cap is a hard error") {
    GroupTable gt(build("A1"));
    AlgebraContext ctx(gt, /*degree_cap=*/4);
    Monomial cube = unit_monomial(1);
    cube.e0[0] = 3;
    AlgebraElement x = ctx.monomial_element(cube, nu_const(1, 1));
    Monomial c1 = unit_monomial(1);
    c1.e1[0] = 3;
    AlgebraElement y = ctx.monomial_element(c1, nu_const(1, 1));
    CHECK_THROWS_AS(multiply(x, y), DegreeCapExceeded);
    // within the cap the same shapes multiply fine
    Monomial sq = unit_monomial(1);
    sq.e0[0] = 2;
    Monomial s1 = unit_monomial(1);
    s1.e1[0] = 2;
    CHECK(!multiply(ctx.monomial_element(sq, nu_const(1, 1)), ctx.monomial_element(s1, nu_const(1, 1)))
               .is_zero());
}

TEST_CASE("contexts are not interchangeable") {
    GroupTable g1(build("A1"));
    GroupTable g2(build("A2"));
    AlgebraContext c1(g1), c2(g2);
    CHECK_THROWS_AS(multiply(c1.one(), c2.one()), SystemMismatch);
    CHECK_THROWS_AS(c1.generator(0, 5), UnknownGenerator);
    CHECK_THROWS_AS(c1.generator(2, 0), UnknownGenerator);
}

TEST_CASE("conjugation by a group element is an algebra automorphism") {
    GroupTable gt(build("B2"));
    AlgebraContext ctx(gt);
    std::mt19937_64 rng(0xc0ffeeULL);
    std::uniform_int_distribution<unsigned> pick(0, gt.size() - 1);
    for (int t = 0; t < 10; ++t) {
        unsigned tau = pick(rng);
        AlgebraElement x = random_element(ctx, rng, 2, 2);
        AlgebraElement y = random_element(ctx, rng, 2, 2);
        CHECK(conjugate(x * y, tau) == conjugate(x, tau) * conjugate(y, tau));
        CHECK(conjugate(conjugate(x, tau), gt.inverse(tau)) == x);
    }
}
