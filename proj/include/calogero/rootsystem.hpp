#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "calogero/cyclotomic.hpp"
#include "calogero/errors.hpp"
#include "calogero/linalg.hpp"

namespace calogero {

// A vector in the ambient space V, coordinates in the working cyclotomic field.
using Vector = std::vector<Cyclotomic>;

// A finite root system together with the symmetric bilinear form it lives in.
//
// Coordinates are taken in a basis adapted to each catalog entry, so the form
// is a general symmetric Gram matrix rather than the identity: crystallographic
// systems then keep rational (conductor-1) coordinates, H-types live over
// Q(zeta_5), and I2(m) over the real subfield of Q(zeta_2m). Every formula in
// the engine uses the form only through form(), so the choice of basis is
// invisible downstream.
struct RootSystem {
    std::string name;
    unsigned rank = 0;       // ambient dimension N
    unsigned conductor = 1;  // all coordinates and Gram entries live in Q(zeta_conductor)
    Mat<Cyclotomic> gram;    // symmetric non-degenerate bilinear form
    std::vector<Vector> roots;             // full set, closed under negation
    std::vector<unsigned> simple_roots;    // indices into roots
    std::vector<unsigned> minus_of;        // index of -v for each root v
    std::vector<unsigned> nu_class_of_root;  // nu-variable index per root, constant on W-orbits and under sign
    unsigned num_nu_classes = 0;
    std::vector<unsigned> reflection_pairs;  // one representative index per {v, -v} pair

    // (x, y) = x^T G y
    Cyclotomic form(const Vector& x, const Vector& y) const;
    // R_v(x) = x - 2 (x,v)/(v,v) v
    Vector reflect(unsigned root_index, const Vector& x) const;
    // Index of an exact coordinate match, or -1.
    int find_root(const Vector& v) const;

    // Internal: (re)build the lookup key map after roots change.
    void index_roots();

private:
    std::unordered_map<std::string, unsigned> root_index_;
};

// Catalog constructor. Names: "A0".."A5", "B2".."B4", "D4", "G2", "F4",
// "I2(3)".."I2(12)", "H3", "H4", and "E6" when enable_e6 is set.
RootSystem build(const std::string& name, bool enable_e6 = false);

// Checks the root-system axioms exhaustively:
//   (i)  the set is closed under every reflection R_v,
//   (ii) collinear roots occur only as {v, -v}, and no zero roots,
// plus consistency of the nu-class labelling (constant on W-orbits and signs).
// Throws AxiomViolation naming a witness on failure.
void validate(const RootSystem& rs);

// Matrix of x |-> x - 2 (x,v)/(v,v) v with respect to the form given by gram.
Mat<Cyclotomic> reflection_matrix(const Mat<Cyclotomic>& gram, const Vector& v);

// Form evaluation against an explicit Gram matrix.
Cyclotomic form_with(const Mat<Cyclotomic>& gram, const Vector& x, const Vector& y);

}  // namespace calogero
