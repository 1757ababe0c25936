#include "calogero/glc.hpp"

#include <algorithm>

#include "calogero/errors.hpp"

namespace calogero {

namespace {

// Basis of the kappa-eigenspace of the element's matrix.
std::vector<Vector> eigenspace_basis(const GroupTable& gt, unsigned element_id, int kappa) {
    Mat<Cyclotomic> shifted = gt.matrix(element_id);
    for (unsigned i = 0; i < shifted.rows; ++i) shifted.at(i, i) -= Cyclotomic(kappa);
    return kernel_basis(shifted);
}

void rows_for(std::vector<GlcRow>& out, const GroupTable& gt, int kappa, unsigned g) {
    const RootSystem& rs = gt.root_system();
    std::vector<Vector> eig = eigenspace_basis(gt, g, kappa);
    unsigned cls_g = gt.class_of(g);
    for (const Vector& ci : eig) {
        for (const Vector& cj : eig) {
            GlcRow row;
            row.source_class = cls_g;
            auto add = [&](unsigned cls, const NuPoly& v) {
                auto [it, inserted] = row.coeff.try_emplace(cls, v);
                if (!inserted) it->second += v;
                if (it->second.is_zero()) row.coeff.erase(it);
            };
            add(cls_g, NuPoly(rs.form(ci, cj), rs.num_nu_classes));
            for (unsigned w : rs.reflection_pairs) {
                const Vector& root = rs.roots[w];
                Cyclotomic num = rs.form(ci, root) * rs.form(cj, root);
                if (num.is_zero()) continue;
                Cyclotomic coeff = Cyclotomic(2) * num / rs.form(root, root);
                unsigned rg = gt.product(gt.reflection_element(w), g);
                NuPoly term = NuPoly(coeff) * NuPoly::variable(rs.nu_class_of_root[w], rs.num_nu_classes);
                add(gt.class_of(rg), term);
            }
            out.push_back(std::move(row));
        }
    }
}

}  // namespace

GlcSystem build_glc(const GroupTable& gt, int kappa) {
    GlcSystem sys;
    sys.kappa = kappa;
    sys.num_classes = static_cast<unsigned>(gt.classes().size());
    sys.nvars = gt.root_system().num_nu_classes;
    for (const auto& cls : gt.classes()) {
        unsigned e = (kappa == 1) ? cls.e_plus : cls.e_minus;
        if (e == 0) continue;
        rows_for(sys.rows, gt, kappa, cls.representative);
    }
    return sys;
}

std::vector<GlcRow> glc_rows_for_element(const GroupTable& gt, int kappa, unsigned element_id) {
    std::vector<GlcRow> rows;
    rows_for(rows, gt, kappa, element_id);
    return rows;
}

Mat<NuPoly> glc_matrix(const GlcSystem& sys) {
    Mat<NuPoly> m(static_cast<unsigned>(sys.rows.size()), sys.num_classes);
    for (unsigned i = 0; i < sys.rows.size(); ++i)
        for (const auto& [cls, v] : sys.rows[i].coeff) m.at(i, cls) = v;
    return m;
}

Mat<Cyclotomic> glc_matrix_at(const GlcSystem& sys, const std::vector<Cyclotomic>& nu) {
    Mat<Cyclotomic> m(static_cast<unsigned>(sys.rows.size()), sys.num_classes);
    for (unsigned i = 0; i < sys.rows.size(); ++i)
        for (const auto& [cls, v] : sys.rows[i].coeff) m.at(i, cls) = v.evaluate(nu);
    return m;
}

unsigned nullity(const GlcSystem& sys, const std::vector<Cyclotomic>& nu) {
    if (sys.rows.empty()) return sys.num_classes;
    Mat<Cyclotomic> m = glc_matrix_at(sys, nu);
    return sys.num_classes - rank(m);
}

unsigned nullity_symbolic(const GlcSystem& sys) {
    if (sys.rows.empty()) return sys.num_classes;
    return sys.num_classes - bareiss_rank(glc_matrix(sys));
}

bool satisfies(const GlcSystem& sys, const CentralFunction& f) {
    if (f.size() != sys.num_classes) throw VariableMismatch("central function has the wrong length");
    for (const auto& row : sys.rows) {
        NuPoly acc = NuPoly::zero(sys.nvars);
        for (const auto& [cls, v] : row.coeff) acc += v * f[cls];
        if (!acc.is_zero()) return false;
    }
    return true;
}

std::vector<CentralFunction> solution_basis(const GroupTable& gt, int kappa) {
    const RootSystem& rs = gt.root_system();
    const auto& classes = gt.classes();
    unsigned nvars = rs.num_nu_classes;
    unsigned nc = static_cast<unsigned>(classes.size());

    auto grade = [&](unsigned c) { return (kappa == 1) ? classes[c].e_plus : classes[c].e_minus; };

    // Classes in ascending E order; the induction consumes them in this order.
    std::vector<unsigned> order(nc);
    for (unsigned i = 0; i < nc; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](unsigned a, unsigned b) { return grade(a) < grade(b); });

    std::vector<unsigned> ground;  // E = 0 classes
    for (unsigned c = 0; c < nc; ++c)
        if (grade(c) == 0) ground.push_back(c);

    std::vector<CentralFunction> basis;
    for (unsigned seed : ground) {
        CentralFunction x(nc, NuPoly::zero(nvars));
        x[seed] = NuPoly(Cyclotomic(1), nvars);
        for (unsigned c : order) {
            if (grade(c) == 0) continue;
            unsigned g = classes[c].representative;
            std::vector<Vector> eig = eigenspace_basis(gt, g, kappa);
            const Vector* pick = nullptr;
            Cyclotomic norm(0);
            for (const Vector& cand : eig) {
                Cyclotomic n2 = rs.form(cand, cand);
                if (!n2.is_zero()) {
                    pick = &cand;
                    norm = n2;
                    break;
                }
            }
            if (!pick) throw Error("eigenspace carries a degenerate form; cannot run the induction");
            NuPoly acc = NuPoly::zero(nvars);
            for (unsigned w : rs.reflection_pairs) {
                const Vector& root = rs.roots[w];
                Cyclotomic cw = rs.form(*pick, root);
                if (cw.is_zero()) continue;
                unsigned rg_class = gt.class_of(gt.product(gt.reflection_element(w), g));
                // coefficient nonzero forces E(R_w g) = E(g) - 1: already assigned
                Cyclotomic coeff = Cyclotomic(2) * cw * cw / rs.form(root, root);
                acc += NuPoly(coeff) * NuPoly::variable(rs.nu_class_of_root[w], nvars) * x[rg_class];
            }
            x[c] = -(NuPoly(norm.inverse()) * acc);
        }
        basis.push_back(std::move(x));
    }

    // Certification: every basis function must satisfy the full system
    // identically in nu, and restrict to the standard basis on E = 0 classes.
    GlcSystem sys = build_glc(gt, kappa);
    for (unsigned b = 0; b < basis.size(); ++b) {
        if (!satisfies(sys, basis[b]))
            throw RestrictionNotBijective("extension of the ground-level data failed the full system");
        for (unsigned gi = 0; gi < ground.size(); ++gi) {
            NuPoly expect = (ground[gi] == ground[b]) ? NuPoly(Cyclotomic(1), nvars) : NuPoly::zero(nvars);
            if (basis[b][ground[gi]] != expect)
                throw RestrictionNotBijective("restriction to the E = 0 classes is not the identity");
        }
    }
    return basis;
}

CentralFunction klein_transport(const CentralFunction& f, const GroupTable& gt) {
    unsigned minus = gt.minus_identity_id();  // throws NoMinusIdentity when absent
    const auto& classes = gt.classes();
    if (f.size() != classes.size()) throw VariableMismatch("central function has the wrong length");
    CentralFunction out(f.size());
    for (unsigned c = 0; c < classes.size(); ++c)
        out[c] = f[gt.class_of(gt.product(classes[c].representative, minus))];
    return out;
}

std::vector<Cyclotomic> evaluate_central(const CentralFunction& f, const std::vector<Cyclotomic>& nu) {
    std::vector<Cyclotomic> out;
    out.reserve(f.size());
    for (const auto& p : f) out.push_back(p.evaluate(nu));
    return out;
}

}  // namespace calogero
