#include "calogero/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace calogero {

namespace {

// Dense polynomial over Q, coefficient of x^k at index k. No trailing zeros
// beyond what callers tolerate; helpers normalize where it matters.
using Poly = std::vector<Rational>;

int poly_deg(const Poly& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        if (p[static_cast<std::size_t>(d)] != 0) return d;
    return -1;
}

// Exact division p / q over Q[x]; remainder returned through rem.
Poly poly_divmod(Poly p, const Poly& q, Poly* rem) {
    int dq = poly_deg(q);
    Poly quot(p.size(), Rational(0));
    for (int dp = poly_deg(p); dp >= dq && dp >= 0; dp = poly_deg(p)) {
        Rational f = p[static_cast<std::size_t>(dp)] / q[static_cast<std::size_t>(dq)];
        std::size_t shift = static_cast<std::size_t>(dp - dq);
        quot[shift] = f;
        for (int k = 0; k <= dq; ++k)
            p[shift + static_cast<std::size_t>(k)] -= f * q[static_cast<std::size_t>(k)];
    }
    if (rem) *rem = std::move(p);
    return quot;
}

struct CycloField {
    unsigned n = 1;
    unsigned phi = 1;
    Poly Phi;                       // monic, degree phi
    std::vector<Poly> pow;          // pow[k] = z^k mod Phi, k = 0..maxpow, length phi each
};

std::map<unsigned, CycloField>& field_registry() {
    static std::map<unsigned, CycloField> reg;
    return reg;
}
std::mutex& field_mutex() {
    static std::mutex m;
    return m;
}

const CycloField& field_for(unsigned n);

CycloField build_field(unsigned n) {
    CycloField f;
    f.n = n;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    Poly p(n + 1, Rational(0));
    p[0] = Rational(-1);
    p[n] = Rational(1);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const CycloField& sub = field_for(d);
        Poly rem;
        p = poly_divmod(std::move(p), sub.Phi, &rem);
        // Remainder is identically zero by construction.
    }
    int deg = poly_deg(p);
    f.phi = static_cast<unsigned>(deg);
    f.Phi.assign(p.begin(), p.begin() + deg + 1);

    unsigned maxpow = std::max(n >= 1 ? n - 1 : 0u, 2 * f.phi >= 2 ? 2 * f.phi - 2 : 0u);
    f.pow.resize(maxpow + 1);
    Poly cur(f.phi, Rational(0));
    cur[0] = Rational(1);
    f.pow[0] = cur;
    for (unsigned k = 1; k <= maxpow; ++k) {
        // cur := cur * x mod Phi
        Rational top = f.phi >= 1 ? cur[f.phi - 1] : Rational(0);
        Poly next(f.phi, Rational(0));
        for (unsigned j = f.phi; j-- > 1;) next[j] = cur[j - 1];
        if (top != 0) {
            // x^phi = -(Phi - x^phi) since Phi is monic
            for (unsigned j = 0; j < f.phi; ++j) next[j] -= top * f.Phi[j];
        }
        cur = std::move(next);
        f.pow[k] = cur;
    }
    return f;
}

const CycloField& field_for(unsigned n) {
    {
        std::lock_guard<std::mutex> lk(field_mutex());
        auto it = field_registry().find(n);
        if (it != field_registry().end()) return it->second;
    }
    CycloField f = build_field(n);  // may recurse into field_for(d), d < n
    std::lock_guard<std::mutex> lk(field_mutex());
    return field_registry().emplace(n, std::move(f)).first->second;
}

bool g_auto_embed = true;

Poly reduce_mod(const CycloField& f, const Poly& raw) {
    Poly out(f.phi, Rational(0));
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) continue;
        const Poly& zk = f.pow[k];
        for (unsigned j = 0; j < f.phi; ++j) out[j] += raw[k] * zk[j];
    }
    return out;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

bool Cyclotomic::set_auto_embed(bool enabled) {
    bool prev = g_auto_embed;
    g_auto_embed = enabled;
    return prev;
}

Cyclotomic Cyclotomic::zero(unsigned n) {
    if (n == 0) throw NotDivisible("conductor must be positive");
    const CycloField& f = field_for(n);
    return Cyclotomic(n, Poly(f.phi, Rational(0)));
}

Cyclotomic Cyclotomic::from_rational(const Rational& v, unsigned n) {
    Cyclotomic out = zero(n);
    out.c_[0] = v;
    return out;
}

Cyclotomic Cyclotomic::zeta(unsigned n, long power) {
    if (n == 0) throw NotDivisible("conductor must be positive");
    const CycloField& f = field_for(n);
    long k = power % static_cast<long>(n);
    if (k < 0) k += n;
    return Cyclotomic(n, f.pow[static_cast<std::size_t>(k)]);
}

bool Cyclotomic::is_zero() const {
    for (const Rational& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational())
        throw ConductorMismatch("value is not rational: " + to_string());
    return c_[0];
}

Cyclotomic Cyclotomic::trimmed() const {
    if (n_ != 1 && is_rational()) return Cyclotomic(c_[0]);
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (Rational& x : out.c_) x = -x;
    return out;
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b, bool for_arithmetic) {
    if (a.n_ == b.n_) return;
    if (for_arithmetic && !g_auto_embed)
        throw ConductorMismatch("conductors " + std::to_string(a.n_) + " and " +
                                std::to_string(b.n_) + " with auto-embedding disabled");
    unsigned l = std::lcm(a.n_, b.n_);
    a = a.embed(l);
    b = b.embed(l);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs, true);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += rhs.c_[j];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs, true);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= rhs.c_[j];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs, true);
    const CycloField& f = field_for(n_);
    const std::size_t phi = f.phi;
    Poly conv(2 * phi - 1, Rational(0));
    for (std::size_t i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (rhs.c_[j] == 0) continue;
            conv[i + j] += c_[i] * rhs.c_[j];
        }
    }
    c_ = reduce_mod(f, conv);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
    const CycloField& f = field_for(n_);
    // Extended Euclid in Q[x]: s*this + t*Phi = gcd = nonzero constant.
    Poly r0 = f.Phi;
    Poly r1(c_.begin(), c_.end());
    Poly s0(1, Rational(0)), s1(1, Rational(1));
    while (poly_deg(r1) > 0) {
        Poly rem;
        Poly q = poly_divmod(r0, r1, &rem);
        // s2 = s0 - q*s1
        Poly s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant (Phi_n is irreducible over Q and this != 0).
    Rational c = r1[0];
    Poly inv = reduce_mod(f, s1);
    for (Rational& x : inv) x /= c;
    return Cyclotomic(n_, std::move(inv));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs, true);
    return *this *= rhs.inverse();
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    Cyclotomic a = *this, b = o;
    align(a, b, false);
    return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::conjugate() const {
    const CycloField& f = field_for(n_);
    Poly out(f.phi, Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        std::size_t k = (n_ - j) % n_;
        const Poly& zk = f.pow[k];
        for (unsigned i = 0; i < f.phi; ++i) out[i] += c_[j] * zk[i];
    }
    return Cyclotomic(n_, std::move(out));
}

Cyclotomic Cyclotomic::embed(unsigned m) const {
    if (m == n_) return *this;
    if (m == 0 || m % n_ != 0)
        throw NotDivisible("conductor " + std::to_string(n_) + " does not divide " +
                           std::to_string(m));
    const CycloField& fm = field_for(m);
    unsigned step = m / n_;
    Poly out(fm.phi, Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const Poly& zk = fm.pow[step * j];
        for (unsigned i = 0; i < fm.phi; ++i) out[i] += c_[j] * zk[i];
    }
    return Cyclotomic(m, std::move(out));
}

Cyclotomic Cyclotomic::pow(unsigned long e) const {
    Cyclotomic acc = from_rational(Rational(1), n_);
    Cyclotomic b = *this;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        const Rational& a = c_[j];
        if (a == 0) continue;
        Rational mag = a < 0 ? Rational(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? "-" : "+");
        }
        bool unit_coeff = (mag == 1) && j > 0;
        if (!unit_coeff) os << mag.get_str();
        if (j > 0) {
            if (!unit_coeff) os << "*";
            os << "z";
            if (j > 1) os << "^" << j;
        }
    }
    if (first) return "0";
    return os.str();
}

std::size_t Cyclotomic::hash() const {
    std::size_t h = n_;
    for (const Rational& x : c_)
        h ^= hash_rational(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace calogero
