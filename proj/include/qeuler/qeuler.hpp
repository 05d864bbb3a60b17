#pragma once

#include "qeuler/dirichlet.hpp"
#include "qeuler/ratfun.hpp"

namespace qeuler {

/// [n]_q = 1 + q + ... + q^{n-1}; empty sum for n = 0.
inline PolyQ q_bracket(unsigned n) {
    std::vector<Cyclotomic> c(n, Cyclotomic(1));
    return PolyQ(std::move(c));
}

/// sum_{k=0}^{d-1} chi(k) (-q)^k k^n as a polynomial in q, with 0^0 = 1.
inline PolyQ char_weighted_power_sum(const DirichletChar& chi, unsigned n) {
    unsigned d = chi.modulus();
    std::vector<Cyclotomic> c(d, Cyclotomic(0));
    for (unsigned k = 0; k < d; ++k) {
        Cyclotomic v = chi(k);
        if (v.is_zero()) continue;
        Int kn = int_pow(Int(k), n);
        if (k % 2 == 1) kn = -kn;
        c[k] = v.scaled(Rational(kn));
    }
    return PolyQ(std::move(c));
}

/// Polynomial in the formal variable x whose coefficients are rational
/// functions of q; index j is the coefficient of x^j.
class PolyInX {
public:
    PolyInX() = default;
    explicit PolyInX(std::vector<RatFunQ> coeffs) : c_(std::move(coeffs)) {}

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<RatFunQ>& coeffs() const { return c_; }
    RatFunQ coeff(size_t j) const { return j < c_.size() ? c_[j] : RatFunQ(); }

    /// Horner evaluation at a rational point.
    RatFunQ eval(const Rational& x0) const {
        RatFunQ acc;
        RatFunQ x(x0);
        for (size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
        return acc;
    }

    bool operator==(const PolyInX& o) const { return c_ == o.c_; }
    bool operator!=(const PolyInX& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string out;
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            std::string cs = c_[j].to_string();
            if (!out.empty()) out += "+";
            if (j == 0) {
                out += cs;
            } else {
                if (cs != "1") out += "(" + cs + ")*";
                out += "x";
                if (j > 1) out += "^" + std::to_string(j);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<RatFunQ> c_;
};

inline RatFunQ poly_eval(const PolyInX& p, const Rational& x0) { return p.eval(x0); }

/// Memoizing computation context for the q-Euler family attached to one
/// Dirichlet character. Returned values are immutable; a session is
/// single-owner while its memo tables grow.
class QEulerSession {
public:
    QEulerSession() : chi_(trivial_char()) {}
    explicit QEulerSession(DirichletChar chi) : chi_(std::move(chi)) {}

    const DirichletChar& character() const { return chi_; }

    /// E_{n,q}: the d = 1 case, from (q+1) E_n = [2]_q delta_{n,0} - q sum_{l<n} C(n,l) E_l.
    RatFunQ q_euler_number(unsigned n) {
        ensure_plain(n);
        return plain_[n];
    }

    /// E_{n,chi,q} via the inverted boundary identity:
    /// (q^d + 1) E_n = [2]_q sum_{k<d} chi(k)(-q)^k k^n - q^d sum_{j<n} C(n,j) d^{n-j} E_j.
    RatFunQ gen_q_euler_number(unsigned n) {
        ensure_gen(n);
        return gen_[n];
    }

    /// E_{n,q}(x) = sum_l C(n,l) E_{l,q} x^{n-l}.
    PolyInX q_euler_poly(unsigned n) {
        ensure_plain(n);
        return binomial_poly(n, plain_);
    }

    /// E_{n,chi,q}(x) = sum_l C(n,l) E_{l,chi,q} x^{n-l}.
    PolyInX gen_q_euler_poly(unsigned n) {
        ensure_gen(n);
        return binomial_poly(n, gen_);
    }

private:
    void ensure_plain(unsigned n) {
        if (plain_.empty()) plain_.emplace_back(1);
        while (plain_.size() <= n) {
            unsigned m = static_cast<unsigned>(plain_.size());
            auto row = binomial_row(m);
            RatFunQ acc;
            for (unsigned l = 0; l < m; ++l) acc += plain_[l] * RatFunQ(Rational(row[l]));
            // E_m = -q * acc / (1 + q)
            plain_.push_back(-(RatFunQ(PolyQ::monomial(Cyclotomic(1), 1)) * acc) / RatFunQ(q_bracket(2)));
        }
    }

    void ensure_gen(unsigned n) {
        unsigned d = chi_.modulus();
        RatFunQ qd_plus_1(q_bracket(2).subst_power(d));  // 1 + q^d
        RatFunQ qd(PolyQ::monomial(Cyclotomic(1), d));
        while (gen_.size() <= n) {
            unsigned m = static_cast<unsigned>(gen_.size());
            RatFunQ rhs(char_weighted_power_sum(chi_, m) * q_bracket(2));
            auto row = binomial_row(m);
            RatFunQ acc;
            for (unsigned j = 0; j < m; ++j) {
                Rational scale(Int(row[j] * int_pow(Int(d), m - j)));
                acc += gen_[j] * RatFunQ(scale);
            }
            gen_.push_back((rhs - qd * acc) / qd_plus_1);
        }
    }

    static PolyInX binomial_poly(unsigned n, const std::vector<RatFunQ>& numbers) {
        auto row = binomial_row(n);
        std::vector<RatFunQ> c(n + 1);
        for (unsigned j = 0; j <= n; ++j) c[j] = numbers[n - j] * RatFunQ(Rational(row[j]));
        return PolyInX(std::move(c));
    }

    DirichletChar chi_;
    std::vector<RatFunQ> plain_;
    std::vector<RatFunQ> gen_;
};

/// Frobenius-Euler numbers H_n(u) from (1-u) H_n = -sum_{l<n} C(n,l) H_l,
/// H_0 = 1. u may be any rational function distinct from 1.
inline RatFunQ frobenius_euler_number(unsigned n, const RatFunQ& u) {
    if (u == RatFunQ(1)) throw std::domain_error("pole of generating function");
    RatFunQ one_minus_u = RatFunQ(1) - u;
    std::vector<RatFunQ> h;
    h.emplace_back(1);
    while (h.size() <= n) {
        unsigned m = static_cast<unsigned>(h.size());
        auto row = binomial_row(m);
        RatFunQ acc;
        for (unsigned l = 0; l < m; ++l) acc += h[l] * RatFunQ(Rational(row[l]));
        h.push_back(-acc / one_minus_u);
    }
    return h[n];
}

/// Exact q -> 1 limit; every E-value has denominator a power of 1+q or
/// 1+q^d, which is 2 at q = 1.
inline Cyclotomic classical_limit(const RatFunQ& f) { return f.eval(Cyclotomic(1)); }

}  // namespace qeuler
