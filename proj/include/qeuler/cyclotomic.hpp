#pragma once

#include "qeuler/rational.hpp"

#include <complex>
#include <map>
#include <numeric>
#include <vector>

namespace qeuler {

inline unsigned euler_phi(unsigned m) {
    unsigned result = m, n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Coefficients of the m-th cyclotomic polynomial, ascending, monic of
/// degree phi(m). Computed as (x^m - 1) / prod_{d|m, d<m} Phi_d.
inline const std::vector<Int>& cyclotomic_polynomial(unsigned m) {
    thread_local std::map<unsigned, std::vector<Int>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::vector<Int> p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const std::vector<Int>& phi_d = cyclotomic_polynomial(d);
        // exact division by the monic phi_d
        std::vector<Int> q(p.size() - phi_d.size() + 1);
        for (size_t i = q.size(); i-- > 0;) {
            Int lead = p[i + phi_d.size() - 1];
            q[i] = lead;
            if (lead != 0)
                for (size_t j = 0; j + 1 < phi_d.size(); ++j) p[i + j] -= lead * phi_d[j];
        }
        p = std::move(q);
    }
    return cache.emplace(m, std::move(p)).first->second;
}

/// Element of Q(zeta_m) in the power basis {1, zeta, ..., zeta^{phi(m)-1}}
/// modulo Phi_m. Order 1 is a plain rational. Immutable value semantics.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_{Rational(0)} {}
    Cyclotomic(const Rational& r) : order_(1), c_{r} {}
    Cyclotomic(long n) : order_(1), c_{Rational(n)} {}
    Cyclotomic(const Int& n) : order_(1), c_{Rational(n)} {}

    static Cyclotomic from_coords(unsigned m, std::vector<Rational> coords) {
        if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
        if (coords.size() != euler_phi(m))
            throw std::invalid_argument("coordinate vector must have length phi(m)");
        Cyclotomic z;
        z.order_ = m;
        z.c_ = std::move(coords);
        return z;
    }

    /// zeta_m^k for any integer k (reduced mod m).
    static Cyclotomic root_of_unity(unsigned m, long long k) {
        if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
        long long e = k % static_cast<long long>(m);
        if (e < 0) e += m;
        if (e == 0 || m == 1) return Cyclotomic(1);
        std::vector<Rational> p(static_cast<size_t>(e) + 1, Rational(0));
        p.back() = Rational(1);
        return from_poly(m, std::move(p));
    }

    unsigned order() const { return order_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t j = 1; j < c_.size(); ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }

    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("value is not rational");
        return c_[0];
    }

    /// Same value, re-expressed at order 1 when it happens to be rational.
    Cyclotomic compressed() const { return is_rational() ? Cyclotomic(c_[0]) : *this; }

    /// Embed into Q(zeta_M) for order_ | M via zeta_m = zeta_M^{M/m}.
    Cyclotomic lifted(unsigned M) const {
        if (M == order_) return *this;
        if (M % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
        unsigned stride = M / order_;
        std::vector<Rational> p((c_.size() - 1) * stride + 1, Rational(0));
        for (size_t j = 0; j < c_.size(); ++j) p[j * stride] = c_[j];
        return from_poly(M, std::move(p));
    }

    Cyclotomic operator-() const {
        Cyclotomic r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Cyclotomic operator+(const Cyclotomic& o) const {
        unsigned L = std::lcm(order_, o.order_);
        Cyclotomic a = lifted(L), b = o.lifted(L);
        for (size_t j = 0; j < a.c_.size(); ++j) a.c_[j] += b.c_[j];
        return a;
    }

    Cyclotomic operator-(const Cyclotomic& o) const { return *this + (-o); }

    Cyclotomic operator*(const Cyclotomic& o) const {
        if (order_ == 1) return o.scaled(c_[0]);
        if (o.order_ == 1) return scaled(o.c_[0]);
        unsigned L = std::lcm(order_, o.order_);
        Cyclotomic a = lifted(L), b = o.lifted(L);
        std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return from_poly(L, std::move(prod));
    }

    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }
    Cyclotomic& operator/=(const Cyclotomic& o) { *this = *this / o; return *this; }

    Cyclotomic scaled(const Rational& r) const {
        Cyclotomic out(*this);
        for (auto& x : out.c_) x *= r;
        return out;
    }

    /// Field inverse via extended Euclid against Phi_m (irreducible over Q).
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (order_ == 1) return Cyclotomic(c_[0].inverse());

        const auto& phi_int = cyclotomic_polynomial(order_);
        std::vector<Rational> r0(phi_int.begin(), phi_int.end());
        std::vector<Rational> r1(c_);
        trim(r1);
        std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
        while (r1.size() > 1) {
            auto [quot, rem] = poly_divmod(r0, r1);
            std::vector<Rational> s2 = poly_sub(s0, poly_mul(quot, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            trim(r1);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r1 is a nonzero constant: s1 * this == r1 (mod Phi)
        Rational inv_const = r1[0].inverse();
        for (auto& x : s1) x *= inv_const;
        return from_poly(order_, std::move(s1));
    }

    bool operator==(const Cyclotomic& o) const {
        unsigned L = std::lcm(order_, o.order_);
        return lifted(L).c_ == o.lifted(L).c_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::complex<double> to_complex() const {
        static const double two_pi = 6.283185307179586476925286766559;
        std::complex<double> sum(0.0, 0.0);
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            double angle = two_pi * static_cast<double>(j) / static_cast<double>(order_);
            sum += c_[j].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return sum;
    }

    std::string to_string() const {
        if (is_rational()) return c_[0].to_string();
        std::string out;
        std::string gen = "z" + std::to_string(order_);
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            std::string cs = c_[j].to_string();
            bool neg = cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (!out.empty()) out += neg ? "-" : "+";
            else if (neg) out += "-";
            if (j == 0) {
                out += cs;
            } else {
                if (cs != "1") out += cs + "*";
                out += gen;
                if (j > 1) out += "^" + std::to_string(j);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    static Cyclotomic from_poly(unsigned m, std::vector<Rational> p) {
        const auto& phi = cyclotomic_polynomial(m);
        size_t deg = phi.size() - 1;
        while (p.size() > deg) {
            Rational lead = std::move(p.back());
            size_t off = p.size() - 1 - deg;
            p.pop_back();
            if (!lead.is_zero())
                for (size_t j = 0; j < deg; ++j) p[off + j] -= lead * Rational(phi[j]);
        }
        p.resize(deg, Rational(0));
        Cyclotomic z;
        z.order_ = m;
        z.c_ = std::move(p);
        return z;
    }

    static void trim(std::vector<Rational>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
        if (p.empty()) p.push_back(Rational(0));
    }

    static std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    }

    static std::vector<Rational> poly_sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(std::max(a.size(), b.size()), Rational(0));
        for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
        return out;
    }

    static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(std::vector<Rational> a,
                                                                               const std::vector<Rational>& b) {
        size_t db = b.size() - 1;
        if (a.size() <= db) return {{Rational(0)}, std::move(a)};
        std::vector<Rational> q(a.size() - db, Rational(0));
        Rational lead_inv = b[db].inverse();
        for (size_t i = q.size(); i-- > 0;) {
            Rational f = a[i + db] * lead_inv;
            q[i] = f;
            if (f.is_zero()) continue;
            for (size_t j = 0; j <= db; ++j) a[i + j] -= f * b[j];
        }
        a.resize(db);
        return {std::move(q), std::move(a)};
    }

    unsigned order_;
    std::vector<Rational> c_;
};

/// Spec-level dispatch over the four field operations.
enum class FieldOp { add, sub, mul, div };

inline Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::sub: return a - b;
        case FieldOp::mul: return a * b;
        case FieldOp::div: return a / b;
    }
    throw std::logic_error("unreachable");
}

}  // namespace qeuler
