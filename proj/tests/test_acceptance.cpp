// Acceptance gate for the exact trace engine: eleven end-to-end criteria,
// one PASS/FAIL line each, nonzero exit if any fails. Each line carries a
// short summary and the elapsed wall time; criteria with a runtime budget
// fail when they exceed it.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "calogero/algebra.hpp"
#include "calogero/coxgroup.hpp"
#include "calogero/dunkl.hpp"
#include "calogero/errors.hpp"
#include "calogero/expr.hpp"
#include "calogero/glc.hpp"
#include "calogero/rootsystem.hpp"
#include "calogero/traceval.hpp"

using namespace calogero;

namespace {

// ---------------------------------------------------------------------------
// Fixture shared across criteria: group tables, GLC systems, ν samples.
// ---------------------------------------------------------------------------

constexpr std::uint64_t kSeed = 20260816;

std::vector<std::string> catalog_names() {
    std::vector<std::string> out = {"A1", "A2", "A3", "A4", "A5", "B2", "B3",
                                    "B4", "D4", "G2", "F4"};
    for (int m = 3; m <= 12; ++m) out.push_back("I2(" + std::to_string(m) + ")");
    out.push_back("H3");
    out.push_back("H4");
    return out;
}

std::vector<std::vector<Cyclotomic>> nu_samples(unsigned nvars) {
    std::vector<std::vector<Cyclotomic>> out;
    out.emplace_back(nvars, Cyclotomic(0));
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (unsigned t = 0; t < 3; ++t) {
        std::vector<Cyclotomic> nu;
        for (unsigned i = 0; i < nvars; ++i) {
            long n = num(rng);
            if (n == 0) n = 1;
            nu.emplace_back(make_rational(n, den(rng)));
        }
        out.push_back(std::move(nu));
    }
    return out;
}

struct Fixture {
    std::vector<std::string> names = catalog_names();
    std::map<std::string, std::unique_ptr<GroupTable>> tables;
    std::map<std::pair<std::string, int>, GlcSystem> systems;
    std::map<std::pair<std::string, int>, std::vector<CentralFunction>> bases;

    GroupTable& table(const std::string& name) {
        auto it = tables.find(name);
        if (it == tables.end())
            it = tables.emplace(name, std::make_unique<GroupTable>(build(name))).first;
        return *it->second;
    }
    GlcSystem& glc(const std::string& name, int kappa) {
        auto key = std::make_pair(name, kappa);
        auto it = systems.find(key);
        if (it == systems.end()) it = systems.emplace(key, build_glc(table(name), kappa)).first;
        return it->second;
    }
    std::vector<CentralFunction>& basis(const std::string& name, int kappa) {
        auto key = std::make_pair(name, kappa);
        auto it = bases.find(key);
        if (it == bases.end())
            it = bases.emplace(key, solution_basis(table(name), kappa)).first;
        return it->second;
    }
};

Monomial make_monomial(const std::vector<unsigned>& e0, const std::vector<unsigned>& e1,
                       unsigned g) {
    Monomial m;
    m.e0.assign(e0.begin(), e0.end());
    m.e1.assign(e1.begin(), e1.end());
    m.g = g;
    return m;
}

// All (e0, e1) exponent pairs with total degree <= d.
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

std::vector<PolyFunction::Exponents> poly_exponents(unsigned N, unsigned d) {
    std::vector<PolyFunction::Exponents> out;
    PolyFunction::Exponents e(N, 0);
    std::function<void(unsigned, unsigned)> gen = [&](unsigned slot, unsigned left) {
        if (slot == N) {
            out.push_back(e);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            e[slot] = static_cast<std::uint16_t>(v);
            gen(slot + 1, left - v);
        }
        e[slot] = 0;
    };
    gen(0, d);
    return out;
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

struct Outcome {
    bool ok = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& what) {
    o.ok = false;
    if (o.detail.empty()) o.detail = what;
}

// 1. Eigenvalue census of the whole catalog against the closed-form counts.
Outcome criterion_census(Fixture& fx) {
    Outcome o;
    struct Row {
        const char* name;
        unsigned order, t, st;
    };
    const Row rows[] = {
        {"A1", 2, 1, 1},        {"A2", 6, 1, 2},        {"A3", 24, 1, 2},
        {"A4", 120, 1, 3},      {"A5", 720, 1, 4},      {"B2", 8, 2, 2},
        {"B3", 48, 3, 3},       {"B4", 384, 5, 5},      {"D4", 192, 3, 3},
        {"G2", 12, 3, 3},       {"F4", 1152, 9, 9},     {"I2(3)", 6, 1, 2},
        {"I2(4)", 8, 2, 2},     {"I2(5)", 10, 2, 3},    {"I2(6)", 12, 3, 3},
        {"I2(7)", 14, 3, 4},    {"I2(8)", 16, 4, 4},    {"I2(9)", 18, 4, 5},
        {"I2(10)", 20, 5, 5},   {"I2(11)", 22, 5, 6},   {"I2(12)", 24, 6, 6},
        {"H3", 120, 4, 4},      {"H4", 14400, 20, 20}};
    unsigned n = 0;
    for (const Row& r : rows) {
        GroupTable& gt = fx.table(r.name);
        if (gt.size() != r.order)
            fail(o, std::string(r.name) + ": |W| = " + std::to_string(gt.size()));
        if (gt.counts(+1) != r.t)
            fail(o, std::string(r.name) + ": T = " + std::to_string(gt.counts(+1)));
        if (gt.counts(-1) != r.st)
            fail(o, std::string(r.name) + ": ST = " + std::to_string(gt.counts(-1)));
        ++n;
    }
    // The A-series counts are the distinct-part partition numbers of n,
    // checked against a direct partition count rather than the table above.
    for (unsigned np = 2; np <= 6; ++np) {
        std::function<unsigned(unsigned, unsigned)> parts = [&](unsigned left,
                                                                unsigned min) -> unsigned {
            if (left == 0) return 1;
            unsigned total = 0;
            for (unsigned p = min; p <= left; ++p) total += parts(left - p, p + 1);
            return total;
        };
        std::string name = "A" + std::to_string(np - 1);
        GroupTable& gt = fx.table(name);
        if (gt.counts(+1) != 1) fail(o, name + ": T != 1");
        if (gt.counts(-1) != parts(np, 1)) fail(o, name + ": ST != q(" + std::to_string(np) + ")");
    }
    if (o.ok) o.detail = std::to_string(n) + " systems match the closed-form census";
    return o;
}

// 2. GLC nullity equals the E = 0 class count at nu = 0 and three samples.
Outcome criterion_nullity(Fixture& fx) {
    Outcome o;
    unsigned checked = 0;
    for (const std::string& name : fx.names) {
        GroupTable& gt = fx.table(name);
        auto samples = nu_samples(gt.root_system().num_nu_classes);
        for (int kappa : {+1, -1}) {
            GlcSystem& sys = fx.glc(name, kappa);
            for (const auto& nu : samples) {
                if (nullity(sys, nu) != gt.counts(kappa))
                    fail(o, name + (kappa > 0 ? " (+1)" : " (-1)") + ": nullity mismatch");
                ++checked;
            }
        }
    }
    if (o.ok)
        o.detail = std::to_string(checked) + " nullities equal the E = 0 class counts";
    return o;
}

// 3. Restriction of the GLC nullspace to the E = 0 classes is bijective.
Outcome criterion_restriction(Fixture& fx) {
    Outcome o;
    unsigned numeric = 0, symbolic = 0;
    for (const std::string& name : fx.names) {
        GroupTable& gt = fx.table(name);
        auto samples = nu_samples(gt.root_system().num_nu_classes);
        for (int kappa : {+1, -1}) {
            std::vector<unsigned> e0;
            for (std::size_t k = 0; k < gt.classes().size(); ++k) {
                const ConjClass& c = gt.classes()[k];
                if ((kappa > 0 ? c.e_plus : c.e_minus) == 0)
                    e0.push_back(static_cast<unsigned>(k));
            }
            // Symbolic: the normalized basis construction certifies that the
            // restriction is bijective, and throws otherwise.
            try {
                if (fx.basis(name, kappa).size() != e0.size()) {
                    fail(o, name + ": basis dimension mismatch");
                    continue;
                }
                ++symbolic;
            } catch (const RestrictionNotBijective& e) {
                fail(o, name + ": " + e.what());
                continue;
            }
            // Numeric: the kernel at each sample restricts to a full-rank
            // square matrix on the E = 0 coordinates.
            GlcSystem& sys = fx.glc(name, kappa);
            for (const auto& nu : samples) {
                auto ker = kernel_basis(glc_matrix_at(sys, nu));
                if (ker.size() != e0.size()) {
                    fail(o, name + ": kernel dimension mismatch");
                    continue;
                }
                Mat<Cyclotomic> r(static_cast<unsigned>(ker.size()),
                                  static_cast<unsigned>(e0.size()));
                for (unsigned i = 0; i < r.rows; ++i)
                    for (unsigned j = 0; j < r.cols; ++j) r.at(i, j) = ker[i][e0[j]];
                if (rank(r) != e0.size())
                    fail(o, name + ": restriction to E = 0 classes is singular");
                ++numeric;
            }
        }
    }
    if (o.ok)
        o.detail = std::to_string(symbolic) + " symbolic bases and " + std::to_string(numeric) +
                   " numeric kernels restrict bijectively";
    return o;
}

// 4. Klein element: T = ST and transported supertrace solutions solve the
//    kappa = +1 system with zero residuals.
Outcome criterion_klein(Fixture& fx) {
    Outcome o;
    const std::vector<std::string> expected = {"A1",    "B2",    "B3",     "B4",     "D4",
                                               "G2",    "F4",    "I2(4)",  "I2(6)",  "I2(8)",
                                               "I2(10)", "I2(12)", "H3",   "H4"};
    std::vector<std::string> found;
    for (const std::string& name : fx.names) {
        GroupTable& gt = fx.table(name);
        if (!gt.has_minus_identity()) continue;
        found.push_back(name);
        if (gt.counts(+1) != gt.counts(-1)) fail(o, name + ": T != ST despite -identity");
        GlcSystem& plus = fx.glc(name, +1);
        for (const CentralFunction& f : fx.basis(name, -1))
            if (!satisfies(plus, klein_transport(f, gt)))
                fail(o, name + ": transported solution leaves a residual");
    }
    if (found != expected) fail(o, "unexpected set of systems containing -identity");
    if (o.ok)
        o.detail = std::to_string(found.size()) +
                   " Klein systems: T = ST and transported bases solve the trace GLC";
    return o;
}

// 5. Defining trace axiom on random pairs, identically in nu.
Outcome criterion_axiom(Fixture& fx) {
    Outcome o;
    unsigned checked = 0;
    for (const std::string& name : {std::string("A1"), std::string("A2"), std::string("B2"),
                                    std::string("I2(5)")}) {
        GroupTable& gt = fx.table(name);
        AlgebraContext ctx(gt);
        for (int kappa : {+1, -1}) {
            KappaTrace tr(ctx, kappa, fx.basis(name, kappa).front());
            TraceReport rep = verify_trace_property(tr, 100, 3, kSeed + (kappa > 0 ? 1 : 2));
            if (rep.violations != 0)
                fail(o, name + (kappa > 0 ? " (+1): " : " (-1): ") + rep.first_failure);
            checked += rep.checked;
        }
    }
    if (o.ok)
        o.detail = std::to_string(checked) + " bracket and conjugation identities vanish";
    return o;
}

// 6. Reduction-order independence across randomized strategies.
Outcome criterion_strategies(Fixture& fx) {
    Outcome o;
    unsigned compared = 0;
    for (const std::string& name : {std::string("A1"), std::string("A2"), std::string("B2")}) {
        GroupTable& gt = fx.table(name);
        AlgebraContext ctx(gt);
        const CentralFunction& f = fx.basis(name, -1).front();
        std::vector<std::unique_ptr<KappaTrace>> traces;
        for (unsigned seed : {0u, 1u, 2u, 3u, 17u})
            traces.push_back(std::make_unique<KappaTrace>(ctx, -1, f, seed));
        std::mt19937_64 rng(kSeed + 3);
        for (unsigned t = 0; t < 50; ++t) {
            AlgebraElement x = random_element(ctx, rng, 4);
            NuPoly want = traces.front()->evaluate(x);
            for (std::size_t s = 1; s < traces.size(); ++s)
                if (traces[s]->evaluate(x) != want) fail(o, name + ": strategies disagree");
            ++compared;
        }
    }
    if (o.ok)
        o.detail = std::to_string(compared) + " elements agree across 5 reduction strategies";
    return o;
}

// 7. Zero-coupling evaluations match the pair-contraction closed form.
Outcome criterion_nu0(Fixture& fx) {
    Outcome o;
    unsigned checked = 0;
    for (const std::string& name : {std::string("A1"), std::string("A2"), std::string("B2"),
                                    std::string("I2(5)")}) {
        GroupTable& gt = fx.table(name);
        AlgebraContext ctx(gt);
        unsigned N = ctx.dim();
        std::vector<Cyclotomic> zero(ctx.nvars(), Cyclotomic(0));
        auto exponents = all_exponents(N, 6);
        for (int kappa : {+1, -1}) {
            const CentralFunction& f = fx.basis(name, kappa).front();
            KappaTrace tr(ctx, kappa, f);
            std::vector<Cyclotomic> central0 = evaluate_central(f, zero);
            for (unsigned g = 0; g < gt.size(); ++g) {
                bool e_zero = gt.eigen_multiplicity(g, kappa) == 0;
                for (const auto& [e0, e1] : exponents) {
                    Cyclotomic lhs =
                        tr.evaluate_monomial(make_monomial(e0, e1, g)).evaluate(zero);
                    Cyclotomic rhs = nu0_oracle(ctx, kappa, central0, g, e0, e1);
                    if (lhs != rhs) fail(o, name + ": nu = 0 value differs from the oracle");
                    if (!e_zero && !lhs.is_zero())
                        fail(o, name + ": nonzero value on an element with E != 0");
                    ++checked;
                }
            }
        }
    }
    if (o.ok) o.detail = std::to_string(checked) + " zero-coupling values match the oracle";
    return o;
}

// 8. Dunkl representation identities, plus the bracket and covariance
//    operator equations.
Outcome criterion_dunkl(Fixture& fx) {
    Outcome o;
    unsigned checked = 0;
    for (const std::string& name : {std::string("A2"), std::string("B2")}) {
        GroupTable& gt = fx.table(name);
        DunklReport rep = calogero_check(gt, 6);
        if (rep.violations != 0) fail(o, name + ": " + rep.first_failure);
        checked += rep.checked;
    }
    // Operator form of the deformed bracket on B2.
    {
        GroupTable& gt = fx.table("B2");
        AlgebraContext ctx(gt);
        const RootSystem& rs = gt.root_system();
        unsigned N = rs.rank;
        for (const auto& e : poly_exponents(N, 3)) {
            PolyFunction p = PolyFunction::monomial(e, NuPoly(1));
            for (unsigned i = 0; i < N; ++i)
                for (unsigned j = 0; j < N; ++j) {
                    PolyFunction lhs =
                        rep_generator_apply(rs, 0, i, rep_generator_apply(rs, 1, j, p)) -
                        rep_generator_apply(rs, 1, j, rep_generator_apply(rs, 0, i, p));
                    PolyFunction rhs = rep_apply(gt, ctx.pair_commutator(i, j), p) * NuPoly(2);
                    if (lhs != rhs) fail(o, "B2: operator bracket != deformed pair commutator");
                    ++checked;
                }
        }
        // Reflection covariance of the generators.
        for (unsigned w : rs.reflection_pairs)
            for (const auto& e : poly_exponents(N, 2)) {
                PolyFunction p = PolyFunction::monomial(e, NuPoly(1));
                PolyFunction rp = reflection_pullback(rs, w, p);
                for (unsigned alpha = 0; alpha < 2; ++alpha)
                    for (unsigned i = 0; i < N; ++i) {
                        Vector ei(N, Cyclotomic(0));
                        ei[i] = Cyclotomic(1);
                        Vector c = rs.reflect(w, ei);
                        PolyFunction lhs =
                            reflection_pullback(rs, w, rep_generator_apply(rs, alpha, i, p));
                        PolyFunction rhs(N);
                        for (unsigned j = 0; j < N; ++j) {
                            if (c[j].is_zero()) continue;
                            rhs += rep_generator_apply(rs, alpha, j, rp) * NuPoly(c[j]);
                        }
                        if (lhs != rhs) fail(o, "B2: reflection covariance fails");
                        ++checked;
                    }
            }
    }
    if (o.ok) o.detail = std::to_string(checked) + " operator identities hold";
    return o;
}

// 9. Evenness: odd monomials have zero kappa-trace.
Outcome criterion_evenness(Fixture& fx) {
    Outcome o;
    unsigned checked = 0;
    std::mt19937_64 rng(kSeed + 4);
    for (const std::string& name : {std::string("A1"), std::string("A2"), std::string("B2"),
                                    std::string("I2(5)")}) {
        GroupTable& gt = fx.table(name);
        AlgebraContext ctx(gt);
        unsigned N = ctx.dim();
        for (int kappa : {+1, -1}) {
            KappaTrace tr(ctx, kappa, fx.basis(name, kappa).front());
            for (unsigned t = 0; t < 63; ++t) {
                Monomial m;
                m.e0.assign(N, 0);
                m.e1.assign(N, 0);
                m.g = static_cast<unsigned>(rng() % gt.size());
                unsigned d = 2 * static_cast<unsigned>(rng() % 3) + 1;  // 1, 3, or 5
                for (unsigned b = 0; b < d; ++b) {
                    unsigned slot = static_cast<unsigned>(rng() % (2 * N));
                    if (slot < N)
                        ++m.e0[slot];
                    else
                        ++m.e1[slot - N];
                }
                if (!tr.evaluate_monomial(m).is_zero())
                    fail(o, name + ": odd monomial with nonzero value");
                ++checked;
            }
        }
    }
    if (o.ok) o.detail = std::to_string(checked) + " odd monomials evaluate to zero";
    return o;
}

// 10. The degree <= 3 supertrace bilinear form over A1: full rank at
//     nu = 1/5, degenerate at nu = 1/2.
Outcome criterion_gram(Fixture& fx) {
    Outcome o;
    GroupTable& gt = fx.table("A1");
    AlgebraContext ctx(gt);
    KappaTrace tr(ctx, -1, fx.basis("A1", -1).front());
    GramReport fifth = bilinear_gram(tr, 3, {Cyclotomic(make_rational(1, 5))});
    GramReport half = bilinear_gram(tr, 3, {Cyclotomic(make_rational(1, 2))});
    unsigned dim = static_cast<unsigned>(fifth.basis.size());
    if (dim != 20) fail(o, "basis dimension " + std::to_string(dim) + ", expected 20");
    if (fifth.rank != dim) fail(o, "nu = 1/5: rank " + std::to_string(fifth.rank));
    if (half.rank >= dim) fail(o, "nu = 1/2: no rank drop");
    if (o.ok)
        o.detail = "rank " + std::to_string(fifth.rank) + "/" + std::to_string(dim) +
                   " at nu = 1/5, rank " + std::to_string(half.rank) + " at nu = 1/2";
    return o;
}

// 11. Hand-derived closed-form values for the A1 supertrace.
Outcome criterion_hand_values(Fixture& fx) {
    Outcome o;
    GroupTable& gt = fx.table("A1");
    AlgebraContext ctx(gt);
    KappaTrace tr(ctx, -1, fx.basis("A1", -1).front());
    unsigned nvars = ctx.nvars();
    NuPoly nu = NuPoly::variable(0, nvars);
    NuPoly one(Cyclotomic(1), nvars);
    NuPoly half(Cyclotomic(make_rational(1, 2)), nvars);
    if (!(tr.evaluate(ctx.one()) - one).is_zero()) fail(o, "str(1) != 1");
    unsigned refl = gt.reflection_element(gt.root_system().reflection_pairs.front());
    if (!(tr.evaluate(ctx.group_element(refl)) + nu * Cyclotomic(2)).is_zero())
        fail(o, "str(R) != -2nu");
    AlgebraElement a0a1 = multiply(ctx.generator(0, 0), ctx.generator(1, 0));
    if (!(tr.evaluate(a0a1) - half + nu * nu * Cyclotomic(2)).is_zero())
        fail(o, "str(a0 a1) != 1/2 - 2nu^2");
    if (o.ok) o.detail = "str(1) = 1, str(R) = -2nu, str(a0 a1) = 1/2 - 2nu^2";
    return o;
}

}  // namespace

int main() {
    Fixture fx;
    struct Entry {
        int number;
        const char* title;
        std::function<Outcome(Fixture&)> run;
        double budget_seconds;  // 0 = no budget
    };
    const std::vector<Entry> entries = {
        {1, "eigenvalue census", criterion_census, 60.0},
        {2, "GLC nullity equals the E = 0 class count", criterion_nullity, 120.0},
        {3, "nullspace restriction to E = 0 classes is bijective", criterion_restriction, 0.0},
        {4, "Klein transport carries supertraces to traces", criterion_klein, 0.0},
        {5, "defining kappa-trace axiom on random pairs", criterion_axiom, 600.0},
        {6, "reduction strategies agree", criterion_strategies, 0.0},
        {7, "zero-coupling oracle", criterion_nu0, 0.0},
        {8, "Dunkl representation identities", criterion_dunkl, 0.0},
        {9, "odd monomials have zero trace", criterion_evenness, 0.0},
        {10, "bilinear-form rank drop at nu = 1/2", criterion_gram, 10.0},
        {11, "hand-derived A1 supertrace values", criterion_hand_values, 0.0},
    };

    bool all_ok = true;
    for (const Entry& entry : entries) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = entry.run(fx);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && entry.budget_seconds > 0 && secs > entry.budget_seconds) {
            o.ok = false;
            o.detail = "over budget (" + std::to_string(entry.budget_seconds) + "s)";
        }
        std::printf("%s criterion %d: %s — %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", entry.number,
                    entry.title, o.detail.c_str(), secs);
        std::fflush(stdout);
        all_ok = all_ok && o.ok;
    }
    std::printf("%s\n", all_ok ? "acceptance: all 11 criteria passed"
                               : "acceptance: FAILURES present");
    return all_ok ? 0 : 1;
}
