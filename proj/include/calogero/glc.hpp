#pragma once

#include <map>
#include <vector>

#include "calogero/coxgroup.hpp"
#include "calogero/nupoly.hpp"

namespace calogero {

// A central function on W(R): one value per conjugacy class, polynomial in
// the coupling constants. These are the unknowns of the Ground Level
// Conditions and, once admissible, the data defining a kappa-trace.
using CentralFunction = std::vector<NuPoly>;

// One Ground Level Condition: sum over classes of coeff * x_[class] = 0.
struct GlcRow {
    unsigned source_class = 0;          // class of the group element g behind the row
    std::map<unsigned, NuPoly> coeff;   // sparse, affine-linear in nu
};

struct GlcSystem {
    int kappa = +1;
    unsigned num_classes = 0;
    unsigned nvars = 0;  // number of nu indeterminates
    std::vector<GlcRow> rows;
};

// Builds the full system: for every conjugacy-class representative g with
// E(g) >= 1 and every ordered pair (c_i, c_j) from a (non-normalized) basis
// of the kappa-eigenspace of g, the row
//   (c_i, c_j) x_[g] + sum_w 2 nu_w (c_i, w)(c_j, w)/(w, w) x_[R_w g] = 0,
// the reflection sum running over one representative w per root pair.
GlcSystem build_glc(const GroupTable& gt, int kappa);

// Rows contributed by one specific group element (used to cross-check that
// different representatives of a class cut out the same solutions).
std::vector<GlcRow> glc_rows_for_element(const GroupTable& gt, int kappa, unsigned element_id);

// Dense coefficient matrices of the system.
Mat<NuPoly> glc_matrix(const GlcSystem& sys);
Mat<Cyclotomic> glc_matrix_at(const GlcSystem& sys, const std::vector<Cyclotomic>& nu);

// Exact nullspace dimension at a numeric nu assignment.
unsigned nullity(const GlcSystem& sys, const std::vector<Cyclotomic>& nu);
// Generic nullity over the rational-function field in nu (fraction-free).
unsigned nullity_symbolic(const GlcSystem& sys);

// Does f satisfy every row identically in nu?
bool satisfies(const GlcSystem& sys, const CentralFunction& f);

// Basis of GLC solutions, normalized so that restriction to the E = 0
// classes is the standard basis: one solution per E = 0 class, with value 1
// there and 0 on the other E = 0 classes. Values on E >= 1 classes are built
// inductively in E and certified against the full system; a failed
// certification throws RestrictionNotBijective.
std::vector<CentralFunction> solution_basis(const GroupTable& gt, int kappa);

// g -> f(g * (-identity)); maps supertrace solutions onto trace solutions.
CentralFunction klein_transport(const CentralFunction& f, const GroupTable& gt);

// Pointwise evaluation at a numeric nu assignment.
std::vector<Cyclotomic> evaluate_central(const CentralFunction& f, const std::vector<Cyclotomic>& nu);

}  // namespace calogero
