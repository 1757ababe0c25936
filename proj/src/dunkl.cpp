#include "calogero/dunkl.hpp"

#include <functional>

#include "calogero/errors.hpp"

namespace calogero {

// ---------------------------------------------------------------------------
// PolyFunction arithmetic
// ---------------------------------------------------------------------------

PolyFunction PolyFunction::constant(unsigned dim, const NuPoly& c) {
    PolyFunction p(dim);
    p.add_term(Exponents(dim, 0), c);
    return p;
}

PolyFunction PolyFunction::monomial(const Exponents& e, const NuPoly& c) {
    PolyFunction p(static_cast<unsigned>(e.size()));
    p.add_term(e, c);
    return p;
}

PolyFunction PolyFunction::coordinate(unsigned dim, unsigned i) {
    Exponents e(dim, 0);
    e.at(i) = 1;
    return monomial(e, NuPoly(1));
}

unsigned PolyFunction::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (auto v : e) t += v;
        if (t > d) d = t;
    }
    return d;
}

void PolyFunction::add_term(const Exponents& e, const NuPoly& c) {
    if (e.size() != dim_) throw VariableMismatch("polynomial exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyFunction PolyFunction::operator-() const {
    PolyFunction out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

PolyFunction& PolyFunction::operator+=(const PolyFunction& o) {
    if (dim_ != o.dim_) {
        if (is_zero() && terms_.empty())
            dim_ = o.dim_;
        else if (!o.is_zero())
            throw VariableMismatch("polynomial dimension mismatch");
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyFunction& PolyFunction::operator-=(const PolyFunction& o) {
    if (dim_ != o.dim_) {
        if (is_zero() && terms_.empty())
            dim_ = o.dim_;
        else if (!o.is_zero())
            throw VariableMismatch("polynomial dimension mismatch");
    }
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PolyFunction& PolyFunction::operator*=(const NuPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

std::string PolyFunction::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.to_string() + ")";
        for (unsigned k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            out += "*x_" + std::to_string(k + 1);
            if (e[k] > 1) out += "^" + std::to_string(e[k]);
        }
    }
    return out;
}

PolyFunction multiply(const PolyFunction& a, const PolyFunction& b) {
    if (a.dim() != b.dim() && !a.is_zero() && !b.is_zero())
        throw VariableMismatch("polynomial dimension mismatch");
    PolyFunction out(a.is_zero() ? b.dim() : a.dim());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            PolyFunction::Exponents e(ea);
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = static_cast<std::uint16_t>(e[k] + eb[k]);
            out.add_term(e, ca * cb);
        }
    return out;
}

PolyFunction derivative(const PolyFunction& p, unsigned i) {
    PolyFunction out(p.dim());
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        PolyFunction::Exponents d(e);
        --d[i];
        out.add_term(d, c * Cyclotomic(static_cast<long>(e[i])));
    }
    return out;
}

PolyFunction coordinate_form(const RootSystem& rs, unsigned i) {
    PolyFunction out(rs.rank);
    for (unsigned k = 0; k < rs.rank; ++k) {
        const Cyclotomic& gki = rs.gram.at(k, i);
        if (gki.is_zero()) continue;
        PolyFunction::Exponents e(rs.rank, 0);
        e[k] = 1;
        out.add_term(e, NuPoly(gki));
    }
    return out;
}

namespace {

// Substitute x -> M x into p (pullback along the linear map with matrix M).
PolyFunction substitute(const Mat<Cyclotomic>& M, const PolyFunction& p) {
    unsigned N = p.dim();
    // Image of each coordinate function: x_k -> sum_j M_{kj} x_j.
    std::vector<PolyFunction> image(N, PolyFunction(N));
    for (unsigned k = 0; k < N; ++k)
        for (unsigned j = 0; j < N; ++j) {
            const Cyclotomic& m = M.at(k, j);
            if (m.is_zero()) continue;
            PolyFunction::Exponents e(N, 0);
            e[j] = 1;
            image[k].add_term(e, NuPoly(m));
        }
    PolyFunction out(N);
    for (const auto& [e, c] : p.terms()) {
        PolyFunction acc = PolyFunction::constant(N, c);
        for (unsigned k = 0; k < N; ++k)
            for (unsigned r = 0; r < e[k]; ++r) acc = multiply(acc, image[k]);
        out += acc;
    }
    return out;
}

}  // namespace

PolyFunction group_pullback(const GroupTable& gt, unsigned g, const PolyFunction& p) {
    return substitute(gt.matrix(gt.inverse(g)), p);
}

PolyFunction reflection_pullback(const RootSystem& rs, unsigned root_index,
                                 const PolyFunction& p) {
    return substitute(reflection_matrix(rs.gram, rs.roots[root_index]), p);
}

PolyFunction divide_linear(const PolyFunction& p, const Vector& coeffs) {
    unsigned N = p.dim();
    if (coeffs.size() != N) throw VariableMismatch("linear form arity mismatch");
    unsigned pivot = N;
    for (unsigned k = 0; k < N; ++k)
        if (!coeffs[k].is_zero()) {
            pivot = k;
            break;
        }
    if (pivot == N) throw DivisibilityFailure("division by the zero linear form");
    Cyclotomic lead = coeffs[pivot];

    PolyFunction rem = p;
    PolyFunction quo(N);
    for (;;) {
        // Largest pivot-exponent term still present.
        const PolyFunction::Exponents* best = nullptr;
        const NuPoly* bestc = nullptr;
        for (const auto& [e, c] : rem.terms())
            if (e[pivot] >= 1 && (best == nullptr || e[pivot] > (*best)[pivot])) {
                best = &e;
                bestc = &c;
            }
        if (best == nullptr) break;
        PolyFunction::Exponents q(*best);
        --q[pivot];
        NuPoly qc = *bestc * lead.inverse();
        quo.add_term(q, qc);
        // rem -= (qc x^q) * linear form
        for (unsigned k = 0; k < N; ++k) {
            if (coeffs[k].is_zero()) continue;
            PolyFunction::Exponents e(q);
            ++e[k];
            rem.add_term(e, -(qc * coeffs[k]));
        }
    }
    if (!rem.is_zero())
        throw DivisibilityFailure("polynomial is not divisible by the linear form");
    return quo;
}

PolyFunction dunkl_apply(const RootSystem& rs, unsigned i, const PolyFunction& p) {
    PolyFunction out = derivative(p, i);
    Vector ei(rs.rank, Cyclotomic(0));
    ei[i] = Cyclotomic(1);
    for (unsigned w : rs.reflection_pairs) {
        const Vector& root = rs.roots[w];
        Cyclotomic ei_w = rs.form(ei, root);
        if (ei_w.is_zero()) continue;
        PolyFunction diff = p - reflection_pullback(rs, w, p);
        if (diff.is_zero()) continue;
        // (x, w) as a linear form in the coordinates: coefficient of x_k is (e_k, w).
        Vector form_coeffs(rs.rank);
        for (unsigned k = 0; k < rs.rank; ++k) {
            Vector ek(rs.rank, Cyclotomic(0));
            ek[k] = Cyclotomic(1);
            form_coeffs[k] = rs.form(ek, root);
        }
        PolyFunction quotient = divide_linear(diff, form_coeffs);
        NuPoly nu = NuPoly::variable(rs.nu_class_of_root[w], rs.num_nu_classes);
        out += quotient * (nu * ei_w);
    }
    return out;
}

PolyFunction rep_generator_apply(const RootSystem& rs, unsigned alpha, unsigned i,
                                 const PolyFunction& p) {
    PolyFunction xi = multiply(coordinate_form(rs, i), p);
    PolyFunction di = dunkl_apply(rs, i, p);
    return alpha == 0 ? xi + di : xi - di;
}

PolyFunction rep_apply(const GroupTable& gt, const AlgebraElement& x, const PolyFunction& p) {
    const RootSystem& rs = gt.root_system();
    PolyFunction out(rs.rank);
    for (const auto& [m, c] : x.terms()) {
        PolyFunction acc = group_pullback(gt, m.g, p);
        // Rightmost factors act first: the group element, then the alpha = 1
        // block, then the alpha = 0 block.
        for (unsigned k = 0; k < rs.rank; ++k)
            for (unsigned r = 0; r < m.e1[k]; ++r) acc = rep_generator_apply(rs, 1, k, acc);
        for (unsigned k = 0; k < rs.rank; ++k)
            for (unsigned r = 0; r < m.e0[k]; ++r) acc = rep_generator_apply(rs, 0, k, acc);
        out += acc * c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identity suite
// ---------------------------------------------------------------------------

namespace {

std::vector<PolyFunction::Exponents> monomials_up_to(unsigned N, unsigned d) {
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
    if (N == 0)
        out.push_back(e);
    else
        gen(0, d);
    return out;
}

}  // namespace

DunklReport calogero_check(const GroupTable& gt, unsigned max_degree) {
    const RootSystem& rs = gt.root_system();
    unsigned N = rs.rank;
    DunklReport rep;
    auto fail = [&rep](const std::string& what) {
        ++rep.violations;
        if (rep.first_failure.empty()) rep.first_failure = what;
    };

    // Inverse Gram for the basis-independent T_01 contraction.
    auto ginv_opt = inverse(rs.gram);
    if (!ginv_opt) throw Error("degenerate Gram matrix");
    const Mat<Cyclotomic>& ginv = *ginv_opt;

    // T = 1/2 sum_{ij} (G^{-1})_{ij} {y_{0,i}, y_{1,j}}: twice the abstract
    // T_01, so the ladder relations appear with eigenvalue 2.
    auto apply_T = [&](const PolyFunction& p) {
        PolyFunction out(N);
        for (unsigned i = 0; i < N; ++i)
            for (unsigned j = 0; j < N; ++j) {
                const Cyclotomic& w = ginv.at(i, j);
                if (w.is_zero()) continue;
                PolyFunction s01 = rep_generator_apply(rs, 0, i, rep_generator_apply(rs, 1, j, p));
                PolyFunction s10 = rep_generator_apply(rs, 1, j, rep_generator_apply(rs, 0, i, p));
                out += (s01 + s10) * NuPoly(w * Cyclotomic(make_rational(1, 2)));
            }
        return out;
    };

    for (const auto& e : monomials_up_to(N, max_degree)) {
        PolyFunction p = PolyFunction::monomial(e, NuPoly(1));

        // Dunkl operators commute.
        for (unsigned i = 0; i < N; ++i)
            for (unsigned j = i + 1; j < N; ++j) {
                ++rep.checked;
                PolyFunction lhs = dunkl_apply(rs, i, dunkl_apply(rs, j, p)) -
                                   dunkl_apply(rs, j, dunkl_apply(rs, i, p));
                if (!lhs.is_zero()) fail("[D_i, D_j] != 0");
            }

        // Ladder relations [T, y_{alpha,i}] = -(-1)^alpha 2 y_{alpha,i}.
        for (unsigned alpha = 0; alpha < 2; ++alpha)
            for (unsigned i = 0; i < N; ++i) {
                ++rep.checked;
                PolyFunction yi = rep_generator_apply(rs, alpha, i, p);
                PolyFunction lhs = apply_T(yi) - rep_generator_apply(rs, alpha, i, apply_T(p));
                long want = alpha == 0 ? -2 : 2;
                PolyFunction rhs = yi * NuPoly(want);
                if (lhs != rhs) fail("[T_01, y] ladder relation failed");
            }

        // T commutes with every reflection (checked on lower degrees to keep
        // the run to seconds).
        unsigned d = 0;
        for (auto v : e) d += v;
        if (d <= 4) {
            for (unsigned w : rs.reflection_pairs) {
                ++rep.checked;
                PolyFunction lhs = apply_T(reflection_pullback(rs, w, p)) -
                                   reflection_pullback(rs, w, apply_T(p));
                if (!lhs.is_zero()) fail("[T_01, R_v] != 0");
            }
        }
    }
    return rep;
}

}  // namespace calogero
