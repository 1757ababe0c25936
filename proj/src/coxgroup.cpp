#include "calogero/coxgroup.hpp"

#include <algorithm>
#include <deque>

#include "calogero/errors.hpp"

namespace calogero {

std::string GroupTable::perm_key(const Perm& p) {
    return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(std::uint16_t));
}

unsigned GroupTable::lookup(const Perm& p) const {
    auto it = index_.find(perm_key(p));
    if (it == index_.end()) throw Error("group table lookup failed: element outside the closure");
    return it->second;
}

GroupTable::Perm GroupTable::compose(const Perm& a, const Perm& b) const {
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

GroupTable::GroupTable(RootSystem rs, std::size_t budget) : rs_(std::move(rs)) {
    const unsigned nroots = static_cast<unsigned>(rs_.roots.size());

    // Generator permutations: the simple reflections acting on the root list.
    std::vector<Perm> gens;
    for (unsigned s : rs_.simple_roots) {
        Perm p(nroots);
        for (unsigned i = 0; i < nroots; ++i) {
            int img = rs_.find_root(rs_.reflect(s, rs_.roots[i]));
            if (img < 0) throw AxiomViolation("root set is not closed under a simple reflection");
            p[i] = static_cast<std::uint16_t>(img);
        }
        gens.push_back(std::move(p));
    }

    // Breadth-first closure from the identity.
    Perm id(nroots);
    for (unsigned i = 0; i < nroots; ++i) id[i] = static_cast<std::uint16_t>(i);
    elements_.push_back(id);
    index_.emplace(perm_key(id), 0u);
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        for (const Perm& g : gens) {
            Perm w = compose(g, elements_[head]);
            std::string k = perm_key(w);
            if (index_.emplace(k, static_cast<unsigned>(elements_.size())).second) {
                elements_.push_back(std::move(w));
                if (elements_.size() > budget)
                    throw ClosureBudgetExceeded("group closure exceeded the budget of " +
                                                std::to_string(budget) + " elements");
            }
        }
    }

    // Inverses.
    inverse_.resize(elements_.size());
    for (unsigned e = 0; e < elements_.size(); ++e) {
        Perm inv(nroots);
        for (unsigned i = 0; i < nroots; ++i) inv[elements_[e][i]] = static_cast<std::uint16_t>(i);
        inverse_[e] = lookup(inv);
    }

    // -identity, as the permutation sending every root to its negative. On the
    // empty system -identity and identity coincide.
    if (nroots == 0) {
        minus_id_ = 0;
    } else {
        Perm m(nroots);
        for (unsigned i = 0; i < nroots; ++i) m[i] = static_cast<std::uint16_t>(rs_.minus_of[i]);
        auto it = index_.find(perm_key(m));
        if (it != index_.end()) minus_id_ = it->second;
    }

    // A root basis for matrix reconstruction.
    if (rs_.rank > 0) {
        Mat<Cyclotomic> accum(rs_.rank, 0);
        Mat<Cyclotomic> basis(rs_.rank, rs_.rank);
        unsigned have = 0;
        for (unsigned r = 0; r < nroots && have < rs_.rank; ++r) {
            Mat<Cyclotomic> trial(rs_.rank, have + 1);
            for (unsigned i = 0; i < rs_.rank; ++i) {
                for (unsigned c = 0; c < have; ++c) trial.at(i, c) = rs_.roots[basis_roots_[c]][i];
                trial.at(i, have) = rs_.roots[r][i];
            }
            if (rank(trial) == have + 1) {
                basis_roots_.push_back(r);
                ++have;
            }
        }
        if (have != rs_.rank) throw AxiomViolation("roots do not span the ambient space");
        for (unsigned i = 0; i < rs_.rank; ++i)
            for (unsigned c = 0; c < rs_.rank; ++c) basis.at(i, c) = rs_.roots[basis_roots_[c]][i];
        auto inv = calogero::inverse(basis);
        if (!inv) throw AxiomViolation("root basis is singular");
        basis_inverse_ = *inv;
    }
    matrix_cache_.resize(elements_.size());

    // Conjugacy classes: orbits under conjugation by the generators.
    class_of_.assign(elements_.size(), 0);
    std::vector<bool> seen(elements_.size(), false);
    std::vector<unsigned> gen_ids;
    for (const Perm& g : gens) gen_ids.push_back(lookup(g));
    for (unsigned start = 0; start < elements_.size(); ++start) {
        if (seen[start]) continue;
        ConjClass cls;
        cls.representative = start;
        std::deque<unsigned> todo{start};
        seen[start] = true;
        while (!todo.empty()) {
            unsigned g = todo.front();
            todo.pop_front();
            cls.members.push_back(g);
            for (unsigned s : gen_ids) {
                unsigned c = product(product(s, g), s);  // s = s^{-1} for reflections
                if (!seen[c]) {
                    seen[c] = true;
                    todo.push_back(c);
                }
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.representative = cls.members.front();
        cls.size = static_cast<unsigned>(cls.members.size());
        unsigned ci = static_cast<unsigned>(classes_.size());
        for (unsigned m : cls.members) class_of_[m] = ci;
        classes_.push_back(std::move(cls));
    }
    for (auto& cls : classes_) {
        cls.order = order_of(cls.representative);
        cls.e_plus = eigen_multiplicity(cls.representative, +1);
        cls.e_minus = eigen_multiplicity(cls.representative, -1);
    }
}

unsigned GroupTable::product(unsigned a, unsigned b) const {
    return lookup(compose(elements_.at(a), elements_.at(b)));
}

unsigned GroupTable::order_of(unsigned a) const {
    unsigned n = 1;
    unsigned cur = a;
    while (cur != identity_id()) {
        cur = product(cur, a);
        ++n;
        if (n > size()) throw Error("element order exceeded the group size");
    }
    return n;
}

unsigned GroupTable::reflection_element(unsigned root_index) const {
    const unsigned nroots = static_cast<unsigned>(rs_.roots.size());
    Perm p(nroots);
    for (unsigned i = 0; i < nroots; ++i) {
        int img = rs_.find_root(rs_.reflect(root_index, rs_.roots[i]));
        if (img < 0) throw AxiomViolation("root set is not closed under reflection");
        p[i] = static_cast<std::uint16_t>(img);
    }
    return lookup(p);
}

const Mat<Cyclotomic>& GroupTable::matrix(unsigned id) const {
    std::lock_guard<std::mutex> lock(matrix_mutex_);
    auto& slot = matrix_cache_.at(id);
    if (!slot) {
        if (rs_.rank == 0) {
            slot = std::make_unique<const Mat<Cyclotomic>>(0, 0);
        } else {
            Mat<Cyclotomic> imgs(rs_.rank, rs_.rank);
            for (unsigned c = 0; c < rs_.rank; ++c) {
                const Vector& img = rs_.roots[elements_[id][basis_roots_[c]]];
                for (unsigned i = 0; i < rs_.rank; ++i) imgs.at(i, c) = img[i];
            }
            slot = std::make_unique<const Mat<Cyclotomic>>(mat_mul(imgs, basis_inverse_));
        }
    }
    return *slot;
}

unsigned GroupTable::minus_identity_id() const {
    if (!minus_id_) throw NoMinusIdentity("-identity is not an element of this group");
    return *minus_id_;
}

unsigned GroupTable::eigen_multiplicity(unsigned id, int kappa) const {
    const Mat<Cyclotomic>& m = matrix(id);
    Mat<Cyclotomic> shifted = m;
    for (unsigned i = 0; i < shifted.rows; ++i) shifted.at(i, i) -= Cyclotomic(kappa);
    return rs_.rank - rank(shifted);
}

unsigned GroupTable::counts(int kappa) const {
    unsigned n = 0;
    for (const auto& cls : classes_) {
        unsigned e = (kappa == 1) ? cls.e_plus : cls.e_minus;
        if (e == 0) ++n;
    }
    return n;
}

}  // namespace calogero
