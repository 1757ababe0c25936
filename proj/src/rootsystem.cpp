#include "calogero/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <functional>
#include <sstream>
#include <utility>

namespace calogero {

namespace {

std::optional<unsigned> parse_uint(const std::string& s) {
    if (s.empty() || s.size() > 4) return std::nullopt;
    unsigned v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        v = v * 10 + static_cast<unsigned>(ch - '0');
    }
    return v;
}

std::string vector_key(const Vector& v) {
    std::string k;
    for (const auto& c : v) {
        k += c.to_string();
        k += ';';
    }
    return k;
}

Vector negate(const Vector& v) {
    Vector out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(-c);
    return out;
}

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

Vector embed_vector(const Vector& v, unsigned conductor) {
    Vector out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c.embed(conductor));
    return out;
}

Vector reflect_with(const Mat<Cyclotomic>& gram, const Vector& v, const Vector& x) {
    Cyclotomic num = form_with(gram, x, v);
    Cyclotomic den = form_with(gram, v, v);
    Cyclotomic scale = Cyclotomic(2) * num / den;
    Vector out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= scale * v[i];
    return out;
}

// cos(pi/m) as an exact cyclotomic, at the smallest conductor this code tracks
// (1 when rational, m for odd m, 2m for even m).
Cyclotomic cos_pi_over(unsigned m) {
    Cyclotomic two_cos = (m % 2 == 1)
                             ? -(Cyclotomic::zeta(m, (m + 1) / 2) + Cyclotomic::zeta(m, (m - 1) / 2))
                             : Cyclotomic::zeta(2 * m, 1) + Cyclotomic::zeta(2 * m, 2 * m - 1);
    Cyclotomic c = two_cos * Cyclotomic::from_rational(make_rational(1, 2), 1);
    return c.trimmed();
}

Vector rational_vector(std::vector<Rational> coords) {
    Vector out;
    out.reserve(coords.size());
    for (const auto& q : coords) out.push_back(Cyclotomic(q));
    return out;
}

Mat<Cyclotomic> tridiagonal_cartan(unsigned n) {
    Mat<Cyclotomic> g(n, n);
    for (unsigned i = 0; i < n; ++i) {
        g.at(i, i) = Cyclotomic(2);
        if (i + 1 < n) {
            g.at(i, i + 1) = Cyclotomic(-1);
            g.at(i + 1, i) = Cyclotomic(-1);
        }
    }
    return g;
}

std::vector<Vector> unit_vectors(unsigned n) {
    std::vector<Vector> out;
    for (unsigned i = 0; i < n; ++i) {
        Vector v(n, Cyclotomic(0));
        v[i] = Cyclotomic(1);
        out.push_back(std::move(v));
    }
    return out;
}

// Orbit of the given seed vectors under their own reflections, grown until
// closed. Returns the full root list (seeds first, then discoveries).
std::vector<Vector> reflection_closure(const Mat<Cyclotomic>& gram, const std::vector<Vector>& seeds,
                                       unsigned conductor, unsigned cap = 1024) {
    std::vector<Vector> out;
    std::unordered_map<std::string, unsigned> seen;
    auto push = [&](const Vector& v) {
        Vector e = embed_vector(v, conductor);
        std::string k = vector_key(e);
        if (seen.emplace(k, static_cast<unsigned>(out.size())).second) out.push_back(std::move(e));
    };
    for (const auto& s : seeds) push(s);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out.size() > cap) throw AxiomViolation("reflection closure exceeded " + std::to_string(cap) + " roots");
        for (const auto& s : seeds) {
            push(reflect_with(gram, s, out[i]));
            // Closing under the discovered reflections too keeps the seed set
            // honest even when it generates a larger group than expected.
        }
        push(negate(out[i]));
    }
    // A second sweep with every discovered root as mirror, to certify closure.
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out.size() > cap) throw AxiomViolation("reflection closure exceeded " + std::to_string(cap) + " roots");
        for (std::size_t j = 0; j < out.size(); ++j) push(reflect_with(gram, out[j], out[i]));
    }
    return out;
}

struct DisjointSets {
    std::vector<unsigned> parent;
    explicit DisjointSets(unsigned n) : parent(n) {
        for (unsigned i = 0; i < n; ++i) parent[i] = i;
    }
    unsigned find(unsigned x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(unsigned a, unsigned b) { parent[find(a)] = find(b); }
};

// H3 root system: 30 unit vectors over Q(zeta_5).
std::vector<Vector> h3_roots() {
    Cyclotomic sqrt5 = Cyclotomic(1) + Cyclotomic(2) * (Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4));
    Cyclotomic half = Cyclotomic(make_rational(1, 2));
    Cyclotomic tau = (Cyclotomic(1) + sqrt5) * half;      // golden ratio
    Cyclotomic tau_inv = tau - Cyclotomic(1);             // 1/tau
    std::vector<Vector> roots;
    // +-e_i
    for (unsigned i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
            Vector v(3, Cyclotomic(0));
            v[i] = Cyclotomic(s);
            roots.push_back(std::move(v));
        }
    // (1/2)(+-1, +-tau, +-1/tau) under cyclic (even) permutations
    for (unsigned rot = 0; rot < 3; ++rot)
        for (int s0 : {1, -1})
            for (int s1 : {1, -1})
                for (int s2 : {1, -1}) {
                    Vector base = {Cyclotomic(s0) * half, Cyclotomic(s1) * tau * half,
                                   Cyclotomic(s2) * tau_inv * half};
                    Vector v(3);
                    for (unsigned i = 0; i < 3; ++i) v[(i + rot) % 3] = base[i];
                    roots.push_back(std::move(v));
                }
    return roots;
}

// H4 root system: 120 unit vectors over Q(zeta_5).
std::vector<Vector> h4_roots() {
    Cyclotomic sqrt5 = Cyclotomic(1) + Cyclotomic(2) * (Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4));
    Cyclotomic half = Cyclotomic(make_rational(1, 2));
    Cyclotomic tau = (Cyclotomic(1) + sqrt5) * half;
    Cyclotomic tau_inv = tau - Cyclotomic(1);
    std::vector<Vector> roots;
    // +-e_i
    for (unsigned i = 0; i < 4; ++i)
        for (int s : {1, -1}) {
            Vector v(4, Cyclotomic(0));
            v[i] = Cyclotomic(s);
            roots.push_back(std::move(v));
        }
    // (1/2)(+-1, +-1, +-1, +-1)
    for (int s0 : {1, -1})
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    roots.push_back({Cyclotomic(s0) * half, Cyclotomic(s1) * half,
                                     Cyclotomic(s2) * half, Cyclotomic(s3) * half});
    // (1/2)(0, +-1, +-1/tau, +-tau) under even permutations of positions
    static const int even_perms[12][4] = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 0, 3, 2},
                                          {1, 2, 0, 3}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 1, 3, 0},
                                          {2, 3, 0, 1}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};
    for (const auto& p : even_perms)
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1}) {
                    Vector base = {Cyclotomic(0), Cyclotomic(s1) * half,
                                   Cyclotomic(s2) * tau_inv * half, Cyclotomic(s3) * tau * half};
                    Vector v(4);
                    for (unsigned i = 0; i < 4; ++i) v[p[i]] = base[i];
                    roots.push_back(std::move(v));
                }
    return roots;
}

// Finds simple roots forming a Coxeter chain with prescribed consecutive
// angles: (a_k, a_{k+1}) = -edge[k], non-consecutive pairs orthogonal. The
// candidate tuple is accepted only if its reflections regenerate the full set.
std::vector<Vector> find_chain_simples(const Mat<Cyclotomic>& gram, const std::vector<Vector>& roots,
                                       const std::vector<Cyclotomic>& edge, unsigned conductor) {
    unsigned n = static_cast<unsigned>(edge.size()) + 1;
    unsigned m = static_cast<unsigned>(roots.size());
    std::vector<std::vector<Cyclotomic>> pairs(m, std::vector<Cyclotomic>(m));
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) pairs[i][j] = form_with(gram, roots[i], roots[j]);
    std::vector<unsigned> pick;
    Cyclotomic zero(0);
    std::function<bool(unsigned)> rec = [&](unsigned depth) -> bool {
        if (depth == n) {
            std::vector<Vector> simples;
            for (unsigned idx : pick) simples.push_back(roots[idx]);
            return reflection_closure(gram, simples, conductor).size() == roots.size();
        }
        for (unsigned cand = 0; cand < m; ++cand) {
            bool ok = true;
            for (unsigned k = 0; k < depth && ok; ++k) {
                const Cyclotomic& need = (k + 1 == depth) ? -edge[k] : zero;
                if (pairs[pick[k]][cand] != need) ok = false;
            }
            if (!ok) continue;
            pick.push_back(cand);
            if (rec(depth + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!rec(0)) throw AxiomViolation("no simple system found for the requested Coxeter chain");
    std::vector<Vector> simples;
    for (unsigned idx : pick) simples.push_back(roots[idx]);
    return simples;
}

}  // namespace

Cyclotomic form_with(const Mat<Cyclotomic>& gram, const Vector& x, const Vector& y) {
    if (x.size() != gram.rows || y.size() != gram.cols)
        throw AxiomViolation("vector dimension does not match the bilinear form");
    Cyclotomic out(0);
    for (unsigned i = 0; i < gram.rows; ++i) {
        if (x[i].is_zero()) continue;
        for (unsigned j = 0; j < gram.cols; ++j) {
            if (gram.at(i, j).is_zero() || y[j].is_zero()) continue;
            out += x[i] * gram.at(i, j) * y[j];
        }
    }
    return out;
}

Cyclotomic RootSystem::form(const Vector& x, const Vector& y) const { return form_with(gram, x, y); }

Vector RootSystem::reflect(unsigned root_index, const Vector& x) const {
    return reflect_with(gram, roots.at(root_index), x);
}

int RootSystem::find_root(const Vector& v) const {
    auto it = root_index_.find(vector_key(embed_vector(v, conductor)));
    return it == root_index_.end() ? -1 : static_cast<int>(it->second);
}

void RootSystem::index_roots() {
    root_index_.clear();
    for (unsigned i = 0; i < roots.size(); ++i) root_index_.emplace(vector_key(roots[i]), i);
}

Mat<Cyclotomic> reflection_matrix(const Mat<Cyclotomic>& gram, const Vector& v) {
    if (is_zero_vector(v)) throw ZeroVector("reflection through the zero vector");
    unsigned n = static_cast<unsigned>(v.size());
    Cyclotomic norm = form_with(gram, v, v);
    // (Gv)_j
    Vector gv(n, Cyclotomic(0));
    for (unsigned j = 0; j < n; ++j)
        for (unsigned k = 0; k < n; ++k) gv[j] += gram.at(j, k) * v[k];
    Mat<Cyclotomic> r = Mat<Cyclotomic>::identity(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) r.at(i, j) -= Cyclotomic(2) * v[i] * gv[j] / norm;
    return r;
}

void validate(const RootSystem& rs) {
    const auto& roots = rs.roots;
    std::unordered_map<std::string, unsigned> index;
    for (unsigned i = 0; i < roots.size(); ++i) {
        if (roots[i].size() != rs.rank) throw AxiomViolation("root of wrong dimension at index " + std::to_string(i));
        if (is_zero_vector(roots[i])) throw AxiomViolation("zero vector listed as root at index " + std::to_string(i));
        index.emplace(vector_key(embed_vector(roots[i], rs.conductor)), i);
    }
    // axiom (ii): collinear roots only as {v, -v}; no duplicates
    for (unsigned i = 0; i < roots.size(); ++i) {
        for (unsigned j = i + 1; j < roots.size(); ++j) {
            unsigned k = 0;
            while (k < rs.rank && roots[j][k].is_zero()) ++k;
            if (k == rs.rank) continue;
            if (roots[i][k].is_zero()) continue;
            Cyclotomic c = roots[i][k] / roots[j][k];
            bool collinear = true;
            for (unsigned t = 0; t < rs.rank && collinear; ++t)
                if (roots[i][t] != c * roots[j][t]) collinear = false;
            if (!collinear) continue;
            if (c == Cyclotomic(1))
                throw AxiomViolation("duplicate root: indices " + std::to_string(i) + ", " + std::to_string(j));
            if (c != Cyclotomic(-1))
                throw AxiomViolation("collinear roots that are not a +- pair: indices " + std::to_string(i) +
                                     ", " + std::to_string(j));
        }
    }
    // axiom (i): closure under every reflection
    auto lookup = [&](const Vector& v) -> int {
        auto it = index.find(vector_key(embed_vector(v, rs.conductor)));
        return it == index.end() ? -1 : static_cast<int>(it->second);
    };
    for (unsigned v = 0; v < roots.size(); ++v) {
        for (unsigned u = 0; u < roots.size(); ++u) {
            Vector w = reflect_with(rs.gram, roots[v], roots[u]);
            int idx = lookup(w);
            if (idx < 0)
                throw AxiomViolation("reflection image leaves the set: R applied to root " + std::to_string(u) +
                                     " through root " + std::to_string(v));
            if (!rs.nu_class_of_root.empty() &&
                rs.nu_class_of_root[static_cast<unsigned>(idx)] != rs.nu_class_of_root[u])
                throw AxiomViolation("nu-class labels are not conjugation-invariant: roots " + std::to_string(u) +
                                     " -> " + std::to_string(idx));
        }
        if (!rs.nu_class_of_root.empty()) {
            int neg = lookup(negate(roots[v]));
            if (neg >= 0 && rs.nu_class_of_root[static_cast<unsigned>(neg)] != rs.nu_class_of_root[v])
                throw AxiomViolation("nu-class labels differ across a +- pair at root " + std::to_string(v));
        }
    }
}

namespace {

void finalize(RootSystem& rs, const std::vector<Vector>& simples) {
    rs.index_roots();
    // simple-root indices
    rs.simple_roots.clear();
    for (const auto& s : simples) {
        int idx = rs.find_root(s);
        if (idx < 0) throw AxiomViolation("simple root missing from closure");
        rs.simple_roots.push_back(static_cast<unsigned>(idx));
    }
    // negation table
    unsigned n = static_cast<unsigned>(rs.roots.size());
    rs.minus_of.assign(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        int idx = rs.find_root(negate(rs.roots[i]));
        if (idx < 0) throw AxiomViolation("root set is not closed under negation");
        rs.minus_of[i] = static_cast<unsigned>(idx);
    }
    // one representative per {v, -v} pair
    rs.reflection_pairs.clear();
    for (unsigned i = 0; i < n; ++i)
        if (i <= rs.minus_of[i]) rs.reflection_pairs.push_back(i);
    // nu-classes: orbits of the W-action on reflections, i.e. on +- pairs
    DisjointSets ds(n);
    for (unsigned i = 0; i < n; ++i) ds.unite(i, rs.minus_of[i]);
    for (unsigned v : rs.reflection_pairs)
        for (unsigned u = 0; u < n; ++u) {
            int img = rs.find_root(rs.reflect(v, rs.roots[u]));
            if (img < 0) throw AxiomViolation("root set is not reflection-closed");
            ds.unite(u, static_cast<unsigned>(img));
        }
    rs.nu_class_of_root.assign(n, 0);
    std::unordered_map<unsigned, unsigned> class_id;
    for (unsigned i = 0; i < n; ++i) {
        unsigned rep = ds.find(i);
        auto it = class_id.find(rep);
        if (it == class_id.end()) it = class_id.emplace(rep, static_cast<unsigned>(class_id.size())).first;
        rs.nu_class_of_root[i] = it->second;
    }
    rs.num_nu_classes = static_cast<unsigned>(class_id.size());
    validate(rs);
}

RootSystem from_closure(std::string name, unsigned rank, unsigned conductor, Mat<Cyclotomic> gram,
                        const std::vector<Vector>& simples, unsigned expected_roots) {
    RootSystem rs;
    rs.name = std::move(name);
    rs.rank = rank;
    rs.conductor = conductor;
    rs.gram = std::move(gram);
    rs.roots = reflection_closure(rs.gram, simples, conductor);
    if (rs.roots.size() != expected_roots)
        throw AxiomViolation(rs.name + ": closure produced " + std::to_string(rs.roots.size()) +
                             " roots, expected " + std::to_string(expected_roots));
    finalize(rs, simples);
    return rs;
}

RootSystem build_h_type(std::string name, unsigned rank, std::vector<Vector> roots,
                        const std::vector<Cyclotomic>& chain) {
    RootSystem rs;
    rs.name = std::move(name);
    rs.rank = rank;
    rs.conductor = 5;
    rs.gram = Mat<Cyclotomic>::identity(rank);
    rs.roots.clear();
    for (auto& r : roots) rs.roots.push_back(embed_vector(r, 5));
    std::vector<Vector> simples = find_chain_simples(rs.gram, rs.roots, chain, 5);
    finalize(rs, simples);
    return rs;
}

}  // namespace

RootSystem build(const std::string& name, bool enable_e6) {
    auto bad_rank = [&](const std::string& what) -> RootSystem {
        throw RankOutOfRange(name + ": " + what);
    };
    if (name == "A0") {
        RootSystem rs;
        rs.name = "A0";
        rs.rank = 0;
        rs.conductor = 1;
        rs.gram = Mat<Cyclotomic>(0, 0);
        rs.index_roots();
        rs.num_nu_classes = 0;
        return rs;
    }
    if (name.size() >= 2 && name[0] == 'A' && parse_uint(name.substr(1))) {
        unsigned n = *parse_uint(name.substr(1));
        if (n < 1 || n > 5) return bad_rank("catalog covers A1..A5 (and A0)");
        if (n == 1) {
            return from_closure("A1", 1, 1, Mat<Cyclotomic>::identity(1), {rational_vector({make_rational(1)})},
                                2);
        }
        return from_closure(name, n, 1, tridiagonal_cartan(n), unit_vectors(n), n * (n + 1));
    }
    if (name.size() >= 2 && name[0] == 'B' && parse_uint(name.substr(1))) {
        unsigned n = *parse_uint(name.substr(1));
        if (n < 2 || n > 4) return bad_rank("catalog covers B2..B4");
        std::vector<Vector> simples;
        for (unsigned i = 0; i + 1 < n; ++i) {
            Vector v(n, Cyclotomic(0));
            v[i] = Cyclotomic(1);
            v[i + 1] = Cyclotomic(-1);
            simples.push_back(std::move(v));
        }
        Vector last(n, Cyclotomic(0));
        last[n - 1] = Cyclotomic(1);
        simples.push_back(std::move(last));
        return from_closure(name, n, 1, Mat<Cyclotomic>::identity(n), simples, 2 * n * n);
    }
    if (name == "D4") {
        std::vector<Vector> simples;
        for (unsigned i = 0; i + 1 < 4; ++i) {
            Vector v(4, Cyclotomic(0));
            v[i] = Cyclotomic(1);
            v[i + 1] = Cyclotomic(-1);
            simples.push_back(std::move(v));
        }
        Vector last(4, Cyclotomic(0));
        last[2] = Cyclotomic(1);
        last[3] = Cyclotomic(1);
        simples.push_back(std::move(last));
        return from_closure("D4", 4, 1, Mat<Cyclotomic>::identity(4), simples, 24);
    }
    if (name.size() >= 2 && name[0] == 'D' && parse_uint(name.substr(1)))
        return bad_rank("catalog covers D4 only");
    if (name == "G2") {
        Mat<Cyclotomic> g(2, 2);
        g.at(0, 0) = Cyclotomic(2);
        g.at(0, 1) = Cyclotomic(-3);
        g.at(1, 0) = Cyclotomic(-3);
        g.at(1, 1) = Cyclotomic(6);
        return from_closure("G2", 2, 1, g, unit_vectors(2), 12);
    }
    if (name == "F4") {
        Rational h = make_rational(1, 2);
        std::vector<Vector> simples = {
            rational_vector({make_rational(0), make_rational(1), make_rational(-1), make_rational(0)}),
            rational_vector({make_rational(0), make_rational(0), make_rational(1), make_rational(-1)}),
            rational_vector({make_rational(0), make_rational(0), make_rational(0), make_rational(1)}),
            rational_vector({h, -h, -h, -h}),
        };
        return from_closure("F4", 4, 1, Mat<Cyclotomic>::identity(4), simples, 48);
    }
    if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
        auto m_opt = parse_uint(name.substr(3, name.size() - 4));
        if (!m_opt) throw UnknownSystem("malformed dihedral name: " + name);
        unsigned m = *m_opt;
        if (m < 3 || m > 12) return bad_rank("catalog covers I2(3)..I2(12)");
        Cyclotomic c = cos_pi_over(m);
        unsigned conductor = c.conductor();
        Mat<Cyclotomic> g(2, 2);
        g.at(0, 0) = Cyclotomic(1);
        g.at(0, 1) = -c;
        g.at(1, 0) = -c;
        g.at(1, 1) = Cyclotomic(1);
        return from_closure(name, 2, conductor, g, unit_vectors(2), 2 * m);
    }
    if (name == "H3") {
        Cyclotomic half(make_rational(1, 2));
        Cyclotomic cos5 = cos_pi_over(5);
        return build_h_type("H3", 3, h3_roots(), {cos5, half});
    }
    if (name == "H4") {
        Cyclotomic half(make_rational(1, 2));
        Cyclotomic cos5 = cos_pi_over(5);
        return build_h_type("H4", 4, h4_roots(), {cos5, half, half});
    }
    if (name == "E6") {
        if (!enable_e6)
            throw UnknownSystem("E6 is available only when explicitly enabled (large closure)");
        Mat<Cyclotomic> g(6, 6);
        for (unsigned i = 0; i < 6; ++i) g.at(i, i) = Cyclotomic(2);
        auto link = [&](unsigned a, unsigned b) {
            g.at(a, b) = Cyclotomic(-1);
            g.at(b, a) = Cyclotomic(-1);
        };
        link(0, 2);
        link(2, 3);
        link(3, 4);
        link(4, 5);
        link(1, 3);
        return from_closure("E6", 6, 1, g, unit_vectors(6), 72);
    }
    if (name.size() >= 2 && (name[0] == 'E' || name[0] == 'H' || name[0] == 'G' || name[0] == 'F') &&
        std::isdigit(static_cast<unsigned char>(name[1])))
        return bad_rank("rank outside the catalog");
    throw UnknownSystem("unrecognized root-system name: " + name);
}

}  // namespace calogero
