#include "calogero/nupoly.hpp"

#include <algorithm>
#include <sstream>

namespace calogero {

NuPoly::NuPoly(const Cyclotomic& c, unsigned nvars) : nvars_(nvars) {
    if (!c.is_zero()) terms_.emplace(Exponents(nvars, 0), c);
}

NuPoly NuPoly::variable(unsigned k, unsigned nvars) {
    if (k >= nvars)
        throw VariableMismatch("variable index " + std::to_string(k) + " out of range for " +
                               std::to_string(nvars) + " variables");
    NuPoly p = NuPoly::zero(nvars);
    Exponents e(nvars, 0);
    e[k] = 1;
    p.terms_.emplace(std::move(e), Cyclotomic(1));
    return p;
}

NuPoly NuPoly::monomial(const Exponents& e, const Cyclotomic& c) {
    NuPoly p = NuPoly::zero(static_cast<unsigned>(e.size()));
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool NuPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint16_t x) { return x == 0; });
}

Cyclotomic NuPoly::constant_value() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

unsigned NuPoly::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (std::uint16_t x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void NuPoly::align(NuPoly& a, NuPoly& b) {
    if (a.nvars_ == b.nvars_) return;
    auto lift = [](NuPoly& p, unsigned nvars) {
        if (!p.is_constant())
            throw VariableMismatch("nu-polynomials over " + std::to_string(p.nvars_) + " and " +
                                   std::to_string(nvars) + " variables");
        NuPoly lifted(p.constant_value(), nvars);
        p = std::move(lifted);
    };
    if (a.nvars_ < b.nvars_)
        lift(a, b.nvars_);
    else
        lift(b, a.nvars_);
}

void NuPoly::add_term(const Exponents& e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NuPoly NuPoly::operator-() const {
    NuPoly out = NuPoly::zero(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

NuPoly& NuPoly::operator+=(const NuPoly& o) {
    NuPoly rhs = o;
    align(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

NuPoly& NuPoly::operator-=(const NuPoly& o) {
    NuPoly rhs = o;
    align(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

NuPoly& NuPoly::operator*=(const NuPoly& o) {
    NuPoly rhs = o;
    align(*this, rhs);
    NuPoly out = NuPoly::zero(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            Exponents e = e1;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = static_cast<std::uint16_t>(e[i] + e2[i]);
            out.add_term(e, c1 * c2);
        }
    }
    *this = std::move(out);
    return *this;
}

NuPoly& NuPoly::operator*=(const Cyclotomic& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

bool NuPoly::operator==(const NuPoly& o) const {
    if (nvars_ == o.nvars_) return terms_ == o.terms_;
    NuPoly a = *this, b = o;
    align(a, b);
    return a.terms_ == b.terms_;
}

Cyclotomic NuPoly::evaluate(const std::vector<Cyclotomic>& values) const {
    if (values.size() != nvars_)
        throw VariableMismatch("evaluation point has " + std::to_string(values.size()) +
                               " coordinates, polynomial has " + std::to_string(nvars_));
    Cyclotomic acc(0);
    for (const auto& [e, c] : terms_) {
        Cyclotomic term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term *= values[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

std::optional<NuPoly> NuPoly::divide_exact(const NuPoly& a, const NuPoly& b) {
    if (b.is_zero()) return std::nullopt;
    NuPoly rem = a, quot(a.nvars_);
    NuPoly bb = b;
    align(rem, bb);
    quot = NuPoly::zero(rem.nvars_);
    const auto& blead = *bb.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exponents q = rlead.first;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] < blead.first[i]) return std::nullopt;
            q[i] = static_cast<std::uint16_t>(q[i] - blead.first[i]);
        }
        NuPoly t = monomial(q, rlead.second / blead.second);
        quot += t;
        rem -= t * bb;
    }
    return quot;
}

std::string NuPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](std::size_t k) -> std::string {
        if (k < names.size()) return names[k];
        if (nvars_ == 1) return "nu";
        return "nu_" + std::to_string(k + 1);
    };
    std::ostringstream os;
    bool first = true;
    // Iterate in reverse so higher-degree terms print first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        bool negated = false;
        if (!first && cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
            cs.find('-', 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        bool composite = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
        if (!first) os << (negated ? "-" : "+");
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](std::uint16_t x) { return x != 0; });
        bool unit = any_var && (cs == "1" || cs == "-1");
        bool printed_any = false;
        if (unit) {
            if (cs == "-1") os << "-";
        } else {
            if (composite && any_var)
                os << "(" << cs << ")";
            else
                os << cs;
            printed_any = true;
        }
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            if (printed_any) os << "*";
            os << var_name(k);
            if (e[k] > 1) os << "^" << e[k];
            printed_any = true;
        }
    }
    return os.str();
}

std::size_t NuPoly::hash() const {
    std::size_t h = nvars_;
    for (const auto& [e, c] : terms_) {
        for (std::uint16_t x : e) h = h * 1000003u + x;
        h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace calogero

#include "calogero/linalg.hpp"

namespace calogero {

unsigned bareiss_rank(Mat<NuPoly> m) {
    NuPoly prev(Cyclotomic(1), 0);
    unsigned rank = 0;
    for (unsigned col = 0; col < m.cols && rank < m.rows; ++col) {
        unsigned piv = rank;
        while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (unsigned j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        for (unsigned i = rank + 1; i < m.rows; ++i) {
            for (unsigned j = col + 1; j < m.cols; ++j) {
                NuPoly num = m.at(i, j) * m.at(rank, col) - m.at(i, col) * m.at(rank, j);
                auto q = NuPoly::divide_exact(num, prev);
                if (!q)
                    throw Error("fraction-free elimination: exact division failed");
                m.at(i, j) = std::move(*q);
            }
            m.at(i, col) = NuPoly::zero(m.at(i, col).nvars());
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

}  // namespace calogero
