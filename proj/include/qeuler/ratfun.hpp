#pragma once

#include "qeuler/modgcd.hpp"
#include "qeuler/poly.hpp"

namespace qeuler {

/// Rational function in q over cyclotomic coefficients, kept in canonical
/// form: gcd(num, den) = 1 and den monic. Equality is therefore syntactic.
class RatFunQ {
public:
    RatFunQ() : num_(), den_(Cyclotomic(1)) {}
    RatFunQ(PolyQ num) : num_(std::move(num)), den_(Cyclotomic(1)) {}
    RatFunQ(const Cyclotomic& c) : RatFunQ(PolyQ(c)) {}
    RatFunQ(const Rational& r) : RatFunQ(PolyQ(r)) {}
    RatFunQ(long n) : RatFunQ(PolyQ(n)) {}

    RatFunQ(PolyQ num, PolyQ den) {
        if (den.is_zero()) throw std::domain_error("division by zero");
        if (num.is_zero()) {
            num_ = PolyQ();
            den_ = PolyQ(Cyclotomic(1));
            return;
        }
        PolyQ g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
        Cyclotomic lead = den.leading();
        if (lead != Cyclotomic(1)) {
            Cyclotomic inv = lead.inverse();
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunQ operator-() const { return trusted(-num_, den_); }

    RatFunQ operator+(const RatFunQ& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        PolyQ g = poly_gcd(den_, o.den_);
        PolyQ da = den_.exact_div(g), db = o.den_.exact_div(g);
        return RatFunQ(num_ * db + o.num_ * da, den_ * db);
    }

    RatFunQ operator-(const RatFunQ& o) const { return *this + (-o); }

    RatFunQ operator*(const RatFunQ& o) const {
        if (is_zero() || o.is_zero()) return RatFunQ();
        // cross-cancellation; the invariants make the result fully reduced
        PolyQ g1 = poly_gcd(num_, o.den_);
        PolyQ g2 = poly_gcd(o.num_, den_);
        PolyQ n = num_.exact_div(g1) * o.num_.exact_div(g2);
        PolyQ d = den_.exact_div(g2) * o.den_.exact_div(g1);
        Cyclotomic lead = d.leading();
        if (lead != Cyclotomic(1)) {
            Cyclotomic inv = lead.inverse();
            n = n.scaled(inv);
            d = d.scaled(inv);
        }
        return trusted(std::move(n), std::move(d));
    }

    RatFunQ operator/(const RatFunQ& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return *this * trusted(o.den_, o.num_);
    }

    RatFunQ& operator+=(const RatFunQ& o) { *this = *this + o; return *this; }
    RatFunQ& operator-=(const RatFunQ& o) { *this = *this - o; return *this; }
    RatFunQ& operator*=(const RatFunQ& o) { *this = *this * o; return *this; }
    RatFunQ& operator/=(const RatFunQ& o) { *this = *this / o; return *this; }

    bool operator==(const RatFunQ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunQ& o) const { return !(*this == o); }

    /// q -> q^d. Coprimality and monicity survive substitution.
    RatFunQ subst_power(unsigned d) const {
        if (d == 0) throw std::invalid_argument("substitution exponent must be positive");
        return trusted(num_.subst_power(d), den_.subst_power(d));
    }

    Cyclotomic eval(const Cyclotomic& q0) const {
        Cyclotomic d = den_.eval(q0);
        if (d.is_zero()) throw std::domain_error("pole");
        return num_.eval(q0) / d;
    }

    std::complex<double> eval_complex(const std::complex<double>& q0, double den_floor = 1e-300) const {
        std::complex<double> d = den_.eval_complex(q0);
        if (std::abs(d) <= den_floor) throw std::domain_error("pole");
        return num_.eval_complex(q0) / d;
    }

    unsigned common_order() const { return std::lcm(num_.common_order(), den_.common_order()); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string n = poly_to_string(num_);
        if (den_.is_one()) return n;
        if (count_terms(num_) > 1) n = "(" + n + ")";
        std::string d = poly_to_string(den_);
        if (count_terms(den_) > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

    static std::string poly_to_string(const PolyQ& p, const std::string& var = "q") {
        if (p.is_zero()) return "0";
        std::string out;
        for (size_t j = 0; j < p.coeffs().size(); ++j) {
            const Cyclotomic& c = p.coeffs()[j];
            if (c.is_zero()) continue;
            std::string mag;
            bool neg = false;
            if (c.is_rational()) {
                Rational r = c.as_rational();
                neg = r.sign() < 0;
                mag = (neg ? -r : r).to_string();
            } else {
                mag = "(" + c.to_string() + ")";
            }
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? "-" : "+";
            }
            if (j == 0) {
                out += mag;
            } else {
                if (mag != "1") out += mag + "*";
                out += var;
                if (j > 1) out += "^" + std::to_string(j);
            }
        }
        return out;
    }

private:
    static RatFunQ trusted(PolyQ num, PolyQ den) {
        RatFunQ f;
        if (num.is_zero()) return f;
        f.num_ = std::move(num);
        f.den_ = std::move(den);
        return f;
    }

    static int count_terms(const PolyQ& p) {
        int n = 0;
        for (const auto& c : p.coeffs())
            if (!c.is_zero()) ++n;
        return n;
    }

    PolyQ num_, den_;
};

inline RatFunQ rf_arith(const RatFunQ& a, const RatFunQ& b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::sub: return a - b;
        case FieldOp::mul: return a * b;
        case FieldOp::div: return a / b;
    }
    throw std::logic_error("unreachable");
}

inline Cyclotomic rf_eval(const RatFunQ& f, const Cyclotomic& q0) { return f.eval(q0); }

inline std::complex<double> rf_eval_numeric(const RatFunQ& f, const std::complex<double>& q0,
                                            double den_floor = 1e-300) {
    return f.eval_complex(q0, den_floor);
}

inline RatFunQ rf_subst_power(const RatFunQ& f, unsigned d) { return f.subst_power(d); }

}  // namespace qeuler
