#pragma once

#include "qeuler/qeuler.hpp"
#include "qeuler/residue.hpp"

#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace qeuler {

/// Truncated value of an infinite series together with a rigorous bound on
/// the discarded tail.
struct SeriesEstimate {
    std::complex<double> value;
    double tail_bound = 0.0;
    long terms_used = 0;
};

inline constexpr double kSeriesQCeiling = 0.95;

/// [2]_q sum_{k>=0} chi(k) (-q)^k (x0+k)^n, summed until the geometric
/// tail bound drops below tol. Terms are majorized by
/// |[2]_q| |q|^k (x0+k)^n, whose ratio falls below r = (1+|q|)/2 for all
/// k past a computable index; from there tail <= bound_k * r / (1-r).
inline SeriesEstimate series_sum(unsigned n, const DirichletChar& chi, std::complex<double> q0,
                                 const Rational& x0, double tol, double q_ceiling = kSeriesQCeiling) {
    double aq = std::abs(q0);
    if (aq > q_ceiling) throw std::domain_error("series too slow");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (x0.sign() < 0) throw std::invalid_argument("x0 must be nonnegative");

    unsigned d = chi.modulus();
    std::vector<std::complex<double>> chi_c(d);
    for (unsigned k = 0; k < d; ++k) chi_c[k] = chi(k).to_complex();

    std::complex<double> two_q = 1.0 + q0;
    double abs_two_q = std::abs(two_q);
    double x = x0.to_double();
    double r = (1.0 + aq) / 2.0;
    double geom = r / (1.0 - r);

    std::complex<double> sum(0.0, 0.0);
    std::complex<double> qpow(1.0, 0.0);
    double aqpow = 1.0;
    long k = 0;
    for (;; ++k) {
        if (k > 20000000) throw std::domain_error("series too slow");
        double base = x + static_cast<double>(k);
        double p = (base == 0.0 && n == 0) ? 1.0 : std::pow(base, static_cast<double>(n));
        sum += two_q * chi_c[k % d] * qpow * p;
        double bound_k = abs_two_q * aqpow * std::abs(p);
        double ratio = base > 0.0 ? aq * std::pow((base + 1.0) / base, static_cast<double>(n))
                                  : std::numeric_limits<double>::infinity();
        if (ratio <= r && bound_k * geom <= tol)
            return {sum, bound_k * geom, k + 1};
        qpow *= -q0;
        aqpow *= aq;
    }
}

enum class DistMode { printed, corrected };

/// The distribution combination d^n sum_{a<d} (-q)^a chi(a) E_{n,q^d}((a+x0)/d),
/// as printed, or multiplied by (1+q)/(1+q^d) in corrected mode (the factor
/// the printed identity drops for d > 1).
inline RatFunQ distribution_poly_value(unsigned n, const DirichletChar& chi, const Rational& x0,
                                       DistMode mode) {
    unsigned d = chi.modulus();
    QEulerSession plain;
    PolyInX exd = plain.q_euler_poly(n);
    std::vector<RatFunQ> coeffs;
    coeffs.reserve(exd.coeffs().size());
    for (const auto& c : exd.coeffs()) coeffs.push_back(c.subst_power(d));
    PolyInX exd_qd(std::move(coeffs));  // E_{n,q^d}(x)

    RatFunQ sum;
    for (unsigned a = 0; a < d; ++a) {
        Cyclotomic v = chi(a);
        if (v.is_zero()) continue;
        RatFunQ weight(PolyQ::monomial(a % 2 == 1 ? -v : v, a));  // chi(a) (-q)^a
        sum += weight * exd_qd.eval((Rational(a) + x0) / Rational(d));
    }
    sum *= RatFunQ(Rational(int_pow(Int(d), n)));
    if (mode == DistMode::corrected)
        sum *= RatFunQ(q_bracket(2), q_bracket(2).subst_power(d));
    return sum;
}

inline RatFunQ distribution_number(unsigned n, const DirichletChar& chi, DistMode mode) {
    return distribution_poly_value(n, chi, Rational(0), mode);
}

struct Theorem1Report {
    unsigned n = 0;
    bool holds = false;
    RatFunQ lhs, rhs;
    RatFunQ witness;  // lhs - rhs; zero when the identity holds
};

namespace detail {

inline Theorem1Report theorem1_row(unsigned n, const DirichletChar& chi,
                                   const std::vector<RatFunQ>& dist_numbers) {
    unsigned d = chi.modulus();
    auto row = binomial_row(n);
    RatFunQ at_d;  // E_{n,chi,q}(d) built from the distribution-path numbers
    for (unsigned l = 0; l <= n; ++l)
        at_d += dist_numbers[l] * RatFunQ(Rational(Int(row[l] * int_pow(Int(d), n - l))));
    RatFunQ lhs = RatFunQ(PolyQ::monomial(Cyclotomic(1), d)) * at_d + dist_numbers[n];
    RatFunQ rhs(char_weighted_power_sum(chi, n) * q_bracket(2));
    Theorem1Report rep;
    rep.n = n;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.witness = lhs - rhs;
    rep.holds = rep.witness.is_zero();
    return rep;
}

}  // namespace detail

/// Symbolic check of q^d E_{n,chi,q}(d) + E_{n,chi,q} = [2]_q sum_{k<d} chi(k)(-q)^k k^n,
/// with every E computed along the corrected-distribution path so the check is
/// independent of the recurrence that defines the session values.
inline Theorem1Report verify_theorem1(unsigned n, const DirichletChar& chi) {
    std::vector<RatFunQ> dist;
    dist.reserve(n + 1);
    for (unsigned l = 0; l <= n; ++l) dist.push_back(distribution_number(l, chi, DistMode::corrected));
    return detail::theorem1_row(n, chi, dist);
}

/// All rows n = 0..max_n, sharing the distribution-path values.
inline std::vector<Theorem1Report> verify_theorem1_sweep(unsigned max_n, const DirichletChar& chi) {
    std::vector<RatFunQ> dist;
    dist.reserve(max_n + 1);
    for (unsigned l = 0; l <= max_n; ++l)
        dist.push_back(distribution_number(l, chi, DistMode::corrected));
    std::vector<Theorem1Report> out;
    out.reserve(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n) out.push_back(detail::theorem1_row(n, chi, dist));
    return out;
}

struct DistributionReport {
    bool printed_matches = false;
    bool corrected_matches = false;
    double printed_gap = 0.0;
    double corrected_gap = 0.0;
    double tail_bound = 0.0;
};

/// Numeric comparison of both distribution modes against the defining series.
inline DistributionReport verify_distribution(unsigned n, const DirichletChar& chi,
                                              std::complex<double> q0, double tol) {
    SeriesEstimate s = series_sum(n, chi, q0, Rational(0), tol);
    DistributionReport rep;
    rep.tail_bound = s.tail_bound;
    rep.printed_gap = std::abs(distribution_number(n, chi, DistMode::printed).eval_complex(q0) - s.value);
    rep.corrected_gap =
        std::abs(distribution_number(n, chi, DistMode::corrected).eval_complex(q0) - s.value);
    rep.printed_matches = rep.printed_gap <= tol + s.tail_bound;
    rep.corrected_matches = rep.corrected_gap <= tol + s.tail_bound;
    return rep;
}

enum class Theorem2Mode { q_equiv_1, gcd_printed };

inline const char* to_string(Theorem2Mode m) {
    return m == Theorem2Mode::q_equiv_1 ? "q-equiv-1" : "gcd-printed";
}

struct CongruenceReport {
    Int modulus;         // d * p^N
    ResidueElem lhs, rhs;
    bool holds = false;
    Int q_used;
    Theorem2Mode mode = Theorem2Mode::q_equiv_1;
};

/// Exact residue check of
/// [2]_q sum_{a < dp^N} chi(a)(-q)^a a^n == 2 E_{n,chi,q}  (mod dp^N)
/// at an integer q. Mode q_equiv_1 demands dp^N | q-1 (which makes the
/// proof's step q^{dp^N} = 1 valid); mode gcd_printed only demands
/// gcd(q-1, dp) = 1, the hypothesis as printed.
inline CongruenceReport verify_theorem2(unsigned n, const DirichletChar& chi, unsigned p, unsigned N,
                                        const Int& q_int, Theorem2Mode mode) {
    unsigned d = chi.modulus();
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    if (N == 0) throw std::invalid_argument("N must be positive");
    Int m = Int(d) * int_pow(Int(p), N);

    if (mode == Theorem2Mode::q_equiv_1) {
        if ((q_int - 1) % m != 0)
            throw std::invalid_argument("mode q_equiv_1 requires q = 1 (mod d p^N)");
    } else {
        if (int_gcd(q_int - 1, Int(d) * Int(p)) != 1)
            throw std::invalid_argument("mode gcd_printed requires gcd(q-1, dp) = 1");
    }

    // left side: exact finite character sum at the integer q
    Cyclotomic lhs_val(0);
    Rational two_q(Int(q_int + 1));
    unsigned long mu = m.get_ui();
    for (unsigned long a = 0; a < mu; ++a) {
        const Cyclotomic& v = chi(static_cast<long long>(a));
        if (v.is_zero()) continue;
        Int t = int_pow(q_int, a) * int_pow(Int(a), n);
        if (a % 2 == 1) t = -t;
        lhs_val += v.scaled(Rational(t));
    }
    lhs_val = lhs_val.scaled(two_q);

    // right side: 2 E_{n,chi,q} evaluated exactly at q
    QEulerSession session(chi);
    Cyclotomic rhs_val = session.gen_q_euler_number(n).eval(Cyclotomic(Rational(q_int))).scaled(Rational(2));

    unsigned L = std::lcm(lhs_val.order(), rhs_val.order());
    CongruenceReport rep{m, ResidueElem(m, L, {}), ResidueElem(m, L, {}), false, q_int, mode};
    try {
        rep.lhs = cyc_to_residue(lhs_val.lifted(L), m);
        rep.rhs = cyc_to_residue(rhs_val.lifted(L), m);
    } catch (const std::domain_error&) {
        throw std::domain_error("denominator not invertible mod m");
    }
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

/// Classical Euler values E_n(0) from sum_l C(n,l) E_l + E_n = 2 delta_{n,0}.
inline Rational classical_euler_oracle(unsigned n) {
    std::vector<Rational> e;
    e.emplace_back(1);
    while (e.size() <= n) {
        unsigned m = static_cast<unsigned>(e.size());
        auto row = binomial_row(m);
        Rational acc(0);
        for (unsigned l = 0; l < m; ++l) acc += Rational(row[l]) * e[l];
        e.push_back(-acc / Rational(2));
    }
    return e[n];
}

}  // namespace qeuler
