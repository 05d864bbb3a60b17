#pragma once

#include "qeuler/cyclotomic.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

/// num * den^{-1} mod m, in [0, m). Throws "not m-integral" when the
/// denominator shares a factor with m.
inline Int rat_mod(const Rational& r, const Int& m) {
    if (m <= 0 || m % 2 == 0) throw std::invalid_argument("modulus must be odd and positive");
    Int den = r.denominator();
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not m-integral");
    Int v = (r.numerator() % m) * inv % m;
    if (v < 0) v += m;
    return v;
}

/// Cyclotomic integer reduced mod an odd m, coordinate-wise in the power
/// basis of its order.
class ResidueElem {
public:
    ResidueElem(Int modulus, unsigned order, std::vector<Int> coeffs)
        : modulus_(std::move(modulus)), order_(order), coeffs_(std::move(coeffs)) {
        if (modulus_ <= 0 || modulus_ % 2 == 0)
            throw std::invalid_argument("modulus must be odd and positive");
    }

    const Int& modulus() const { return modulus_; }
    unsigned order() const { return order_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const ResidueElem& o) const {
        return modulus_ == o.modulus_ && order_ == o.order_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const ResidueElem& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ",";
            s += coeffs_[i].get_str();
        }
        return s + "] mod " + modulus_.get_str();
    }

private:
    Int modulus_;
    unsigned order_;
    std::vector<Int> coeffs_;
};

inline ResidueElem cyc_to_residue(const Cyclotomic& a, const Int& m) {
    std::vector<Int> coeffs;
    coeffs.reserve(a.coords().size());
    for (const auto& c : a.coords()) coeffs.push_back(rat_mod(c, m));
    return ResidueElem(m, a.order(), std::move(coeffs));
}

/// Congruence in the cyclotomic integers localized away from m: every power
/// basis coordinate of a - b is m-integral with numerator divisible by m.
inline bool congruent_mod(const Cyclotomic& a, const Cyclotomic& b, const Int& m) {
    Cyclotomic diff = a - b;
    for (const auto& c : diff.coords())
        if (rat_mod(c, m) != 0) return false;
    return true;
}

}  // namespace qeuler
