#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "calogero/rootsystem.hpp"

namespace calogero {

// One conjugacy class of W(R), with the eigenvalue-multiplicity grades
// E(g) = N - rank(g - kappa) that drive the whole trace census.
struct ConjClass {
    unsigned representative = 0;   // smallest member id
    std::vector<unsigned> members; // sorted element ids
    unsigned size = 0;
    unsigned order = 0;            // order of the representative element
    unsigned e_plus = 0;           // E(g) at kappa = +1 (fixed-space dimension)
    unsigned e_minus = 0;          // E(g) at kappa = -1
};

// The finite reflection group W(R), generated by breadth-first closure over
// the simple reflections. Elements are stored as permutations of the root
// list; exact matrices are reconstructed on demand from a root basis and
// cached. Immutable (and safe to query from several threads) once built.
class GroupTable {
public:
    explicit GroupTable(RootSystem rs, std::size_t budget = 200000);

    const RootSystem& root_system() const { return rs_; }
    unsigned size() const { return static_cast<unsigned>(elements_.size()); }
    unsigned identity_id() const { return 0; }

    // Group operations on element ids. product(a, b) applies b first.
    unsigned product(unsigned a, unsigned b) const;
    unsigned inverse(unsigned a) const { return inverse_.at(a); }
    unsigned order_of(unsigned a) const;

    // Element id of the reflection through the given root.
    unsigned reflection_element(unsigned root_index) const;

    // Exact matrix of the element in the ambient coordinates.
    const Mat<Cyclotomic>& matrix(unsigned id) const;

    // Image of root index r under element id.
    unsigned act_on_root(unsigned id, unsigned r) const { return elements_[id][r]; }

    const std::vector<ConjClass>& classes() const { return classes_; }
    unsigned class_of(unsigned id) const { return class_of_.at(id); }

    bool has_minus_identity() const { return minus_id_.has_value(); }
    // Element id of -identity; throws NoMinusIdentity when absent.
    unsigned minus_identity_id() const;

    // E(g) = N - rank(g - kappa * identity), computed exactly.
    unsigned eigen_multiplicity(unsigned id, int kappa) const;

    // Number of conjugacy classes with E = 0 at this kappa: the trace count
    // T_R (kappa = +1) or supertrace count ST_R (kappa = -1).
    unsigned counts(int kappa) const;

private:
    using Perm = std::vector<std::uint16_t>;

    static std::string perm_key(const Perm& p);
    unsigned lookup(const Perm& p) const;
    Perm compose(const Perm& a, const Perm& b) const;  // a after b

    RootSystem rs_;
    std::vector<Perm> elements_;
    std::unordered_map<std::string, unsigned> index_;
    std::vector<unsigned> inverse_;
    std::optional<unsigned> minus_id_;
    std::vector<unsigned> class_of_;
    std::vector<ConjClass> classes_;
    std::vector<unsigned> basis_roots_;           // root indices forming a basis
    Mat<Cyclotomic> basis_inverse_{0, 0};
    mutable std::vector<std::unique_ptr<const Mat<Cyclotomic>>> matrix_cache_;
    mutable std::mutex matrix_mutex_;
};

// Convenience entry point: closure generation from a validated root system.
inline GroupTable generate(const RootSystem& rs, std::size_t budget = 200000) {
    return GroupTable(rs, budget);
}

}  // namespace calogero
