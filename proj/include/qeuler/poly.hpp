#pragma once

#include "qeuler/cyclotomic.hpp"

#include <complex>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

namespace qeuler {

/// Dense univariate polynomial in q with Cyclotomic coefficients,
/// ascending order, trimmed so the leading coefficient is nonzero
/// (the zero polynomial has no coefficients).
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(const Cyclotomic& constant) : c_{constant} { trim(); }
    PolyQ(const Rational& constant) : PolyQ(Cyclotomic(constant)) {}
    PolyQ(long constant) : PolyQ(Cyclotomic(constant)) {}
    explicit PolyQ(std::vector<Cyclotomic> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyQ monomial(const Cyclotomic& coeff, size_t deg) {
        std::vector<Cyclotomic> c(deg + 1, Cyclotomic(0));
        c[deg] = coeff;
        return PolyQ(std::move(c));
    }

    static PolyQ from_int_coeffs(std::initializer_list<long> coeffs) {
        std::vector<Cyclotomic> c;
        for (long x : coeffs) c.emplace_back(x);
        return PolyQ(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == Cyclotomic(1); }
    bool is_constant() const { return c_.size() <= 1; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Cyclotomic>& coeffs() const { return c_; }
    Cyclotomic coeff(size_t i) const { return i < c_.size() ? c_[i] : Cyclotomic(0); }
    const Cyclotomic& leading() const {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    PolyQ operator-() const {
        PolyQ r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    PolyQ operator+(const PolyQ& o) const {
        std::vector<Cyclotomic> out(std::max(c_.size(), o.c_.size()), Cyclotomic(0));
        for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
        return PolyQ(std::move(out));
    }

    PolyQ operator-(const PolyQ& o) const { return *this + (-o); }

    PolyQ operator*(const PolyQ& o) const {
        if (is_zero() || o.is_zero()) return PolyQ();
        std::vector<Cyclotomic> out(c_.size() + o.c_.size() - 1, Cyclotomic(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                if (!o.c_[j].is_zero()) out[i + j] += c_[i] * o.c_[j];
        }
        return PolyQ(std::move(out));
    }

    PolyQ& operator+=(const PolyQ& o) { *this = *this + o; return *this; }
    PolyQ& operator-=(const PolyQ& o) { *this = *this - o; return *this; }
    PolyQ& operator*=(const PolyQ& o) { *this = *this * o; return *this; }

    PolyQ scaled(const Cyclotomic& f) const {
        if (f.is_zero()) return PolyQ();
        PolyQ r(*this);
        for (auto& x : r.c_) x *= f;
        return r;
    }

    /// Quotient and remainder over the coefficient field.
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& b) const {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        if (degree() < b.degree()) return {PolyQ(), *this};
        std::vector<Cyclotomic> rem(c_);
        std::vector<Cyclotomic> quot(rem.size() - b.c_.size() + 1, Cyclotomic(0));
        Cyclotomic lead_inv = b.leading().inverse();
        for (size_t i = quot.size(); i-- > 0;) {
            Cyclotomic f = rem[i + b.c_.size() - 1] * lead_inv;
            if (f.is_zero()) continue;
            quot[i] = f;
            for (size_t j = 0; j < b.c_.size(); ++j) rem[i + j] -= f * b.c_[j];
        }
        rem.resize(b.c_.size() - 1);
        return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
    }

    PolyQ operator%(const PolyQ& b) const { return divmod(b).second; }

    /// Exact quotient; throws if b does not divide this.
    PolyQ exact_div(const PolyQ& b) const {
        auto [q, r] = divmod(b);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    bool divisible_by(const PolyQ& b) const { return divmod(b).second.is_zero(); }

    PolyQ monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inverse());
    }

    PolyQ pow(unsigned e) const {
        PolyQ r(Cyclotomic(1)), b(*this);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// q -> q^d.
    PolyQ subst_power(unsigned d) const {
        if (d == 0) throw std::invalid_argument("substitution exponent must be positive");
        if (is_zero() || d == 1) return *this;
        std::vector<Cyclotomic> out((c_.size() - 1) * d + 1, Cyclotomic(0));
        for (size_t i = 0; i < c_.size(); ++i) out[i * d] = c_[i];
        return PolyQ(std::move(out));
    }

    Cyclotomic eval(const Cyclotomic& q0) const {
        Cyclotomic acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * q0 + c_[i];
        return acc;
    }

    std::complex<double> eval_complex(const std::complex<double>& q0) const {
        std::complex<double> acc(0.0, 0.0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * q0 + c_[i].to_complex();
        return acc;
    }

    bool operator==(const PolyQ& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }
    bool operator!=(const PolyQ& o) const { return !(*this == o); }

    /// lcm of the cyclotomic orders of all coefficients.
    unsigned common_order() const {
        unsigned L = 1;
        for (const auto& c : c_) L = std::lcm(L, c.order());
        return L;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Cyclotomic> c_;
};

namespace detail {

/// Plain monic Euclid over the exact coefficient field.
inline PolyQ poly_gcd_euclid(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = (a % b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace detail

}  // namespace qeuler
