#pragma once

#include "qeuler/cyclotomic.hpp"

#include <numeric>
#include <vector>

namespace qeuler {

class DirichletChar;

namespace detail {

struct UnitFactor {
    unsigned prime_power;       // p^e
    unsigned phi;               // phi(p^e)
    std::vector<unsigned> dlog; // dlog[x] for units x mod p^e, w.r.t. the chosen root
};

inline unsigned primitive_root_mod_prime(unsigned p) {
    if (p == 3) return 2;
    std::vector<unsigned> factors;
    {
        unsigned n = p - 1;
        for (unsigned f = 2; f * f <= n; ++f)
            if (n % f == 0) {
                factors.push_back(f);
                while (n % f == 0) n /= f;
            }
        if (n > 1) factors.push_back(n);
    }
    auto pow_mod = [](unsigned long long b, unsigned long long e, unsigned long long m) {
        unsigned long long r = 1;
        b %= m;
        while (e) {
            if (e & 1) r = r * b % m;
            b = b * b % m;
            e >>= 1;
        }
        return r;
    };
    for (unsigned g = 2; g < p; ++g) {
        bool ok = true;
        for (unsigned f : factors)
            if (pow_mod(g, (p - 1) / f, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

inline UnitFactor make_unit_factor(unsigned p, unsigned e) {
    unsigned pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    unsigned phi = pe / p * (p - 1);
    unsigned g = primitive_root_mod_prime(p);
    if (e > 1) {
        // ensure g stays primitive modulo p^2 (then modulo every p^e)
        unsigned long long gp = 1, p2 = static_cast<unsigned long long>(p) * p;
        for (unsigned i = 0; i < p - 1; ++i) gp = gp * g % p2;
        if (gp == 1) g += p;
    }
    std::vector<unsigned> dlog(pe, 0);
    unsigned long long x = 1;
    for (unsigned i = 0; i < phi; ++i) {
        dlog[static_cast<size_t>(x)] = i;
        x = x * g % pe;
    }
    return {pe, phi, std::move(dlog)};
}

DirichletChar make_char(unsigned d, const std::vector<UnitFactor>& factors, unsigned index);

}  // namespace detail

/// Dirichlet character of odd modulus d with an eagerly materialized exact
/// value table. Characters are enumerated via CRT: d splits into odd prime
/// powers, each unit group is cyclic with a chosen primitive root, and a
/// character is an exponent tuple on those generators (lexicographic order,
/// first factor most significant; index 0 is the principal character).
class DirichletChar {
public:
    unsigned modulus() const { return d_; }
    unsigned index() const { return index_; }
    /// Smallest r with chi^r principal.
    unsigned order() const { return order_; }
    const std::vector<Cyclotomic>& values() const { return values_; }

    const Cyclotomic& operator()(long long k) const {
        long long r = k % static_cast<long long>(d_);
        if (r < 0) r += d_;
        return values_[static_cast<size_t>(r)];
    }

    bool is_principal() const {
        for (unsigned k = 0; k < d_; ++k)
            if (std::gcd(k, d_) == 1 && values_[k] != Cyclotomic(1)) return false;
        return true;
    }

    /// Value-table equality (representation order is immaterial).
    bool operator==(const DirichletChar& o) const {
        if (d_ != o.d_) return false;
        for (unsigned k = 0; k < d_; ++k)
            if (values_[k] != o.values_[k]) return false;
        return true;
    }
    bool operator!=(const DirichletChar& o) const { return !(*this == o); }

private:
    friend DirichletChar detail::make_char(unsigned d, const std::vector<detail::UnitFactor>& factors,
                                           unsigned index);

    DirichletChar(unsigned d, unsigned index, unsigned order, std::vector<Cyclotomic> values)
        : d_(d), index_(index), order_(order), values_(std::move(values)) {}

    unsigned d_ = 1;
    unsigned index_ = 0;
    unsigned order_ = 1;
    std::vector<Cyclotomic> values_;
};

namespace detail {

inline std::vector<UnitFactor> unit_factors(unsigned d) {
    if (d == 0 || d % 2 == 0) throw std::invalid_argument("modulus must be odd");
    std::vector<UnitFactor> factors;
    unsigned n = d;
    for (unsigned p = 3; p * p <= n; p += 2)
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            factors.push_back(make_unit_factor(p, e));
        }
    if (n > 1) factors.push_back(make_unit_factor(n, 1));
    return factors;
}

inline DirichletChar make_char(unsigned d, const std::vector<UnitFactor>& factors, unsigned index) {
    // exponent tuple, first factor most significant
    std::vector<unsigned> t(factors.size());
    {
        unsigned rest = index;
        for (size_t i = factors.size(); i-- > 0;) {
            t[i] = rest % factors[i].phi;
            rest /= factors[i].phi;
        }
    }
    // order of chi and of each factor's value
    unsigned order = 1;
    std::vector<unsigned> comp_order(factors.size()), comp_unit(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
        unsigned g = std::gcd(t[i], factors[i].phi);
        comp_order[i] = factors[i].phi / g;
        comp_unit[i] = t[i] / g;  // coprime to comp_order[i]
        order = std::lcm(order, comp_order[i]);
    }

    std::vector<Cyclotomic> values(d, Cyclotomic(0));
    for (unsigned k = 0; k < d; ++k) {
        if (std::gcd(k, d) != 1) continue;
        unsigned long long expo = 0;
        for (size_t i = 0; i < factors.size(); ++i) {
            unsigned a = factors[i].dlog[k % factors[i].prime_power];
            expo = (expo + static_cast<unsigned long long>(comp_unit[i]) * a % comp_order[i] *
                               (order / comp_order[i])) %
                   order;
        }
        values[k] = Cyclotomic::root_of_unity(order, static_cast<long long>(expo)).compressed();
    }
    return DirichletChar(d, index, order, std::move(values));
}

}  // namespace detail

/// All phi(d) characters of odd modulus d. For d = 1 the single character is
/// identically 1, including at 0.
inline std::vector<DirichletChar> enumerate_chars(unsigned d) {
    auto factors = detail::unit_factors(d);
    unsigned count = 1;
    for (const auto& f : factors) count *= f.phi;
    std::vector<DirichletChar> chars;
    chars.reserve(count);
    for (unsigned index = 0; index < count; ++index)
        chars.push_back(detail::make_char(d, factors, index));
    return chars;
}

/// One character by (modulus, index) without materializing the whole group.
inline DirichletChar dirichlet_char(unsigned d, unsigned index) {
    auto factors = detail::unit_factors(d);
    unsigned count = 1;
    for (const auto& f : factors) count *= f.phi;
    if (index >= count) throw std::invalid_argument("character index out of range");
    return detail::make_char(d, factors, index);
}

/// The unique character mod 1 (identically 1).
inline DirichletChar trivial_char() { return dirichlet_char(1, 0); }

inline bool is_principal(const DirichletChar& chi) { return chi.is_principal(); }

inline Cyclotomic char_eval(const DirichletChar& chi, long long k) { return chi(k); }

}  // namespace qeuler
