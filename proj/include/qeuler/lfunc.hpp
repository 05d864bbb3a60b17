#pragma once

#include "qeuler/verify.hpp"

namespace qeuler {

/// One evaluation request for the interpolating series
/// L_{E,q}(s, chi | x) = [2]_q sum_{n>=0} chi(n) (-q)^n (n+x)^{-s}.
/// x > 0 keeps every base n+x positive, so the complex power uses the real
/// logarithm and no branch choice arises; |q0| < 1 gives absolute
/// convergence for every complex s.
struct LQuery {
    std::complex<double> s;
    DirichletChar chi;
    Rational x;
    std::complex<double> q0;
    double tol = 1e-12;
};

inline SeriesEstimate l_eval(const LQuery& query, double q_ceiling = kSeriesQCeiling) {
    if (!(Rational(0) < query.x)) throw std::invalid_argument("x must be positive");
    double aq = std::abs(query.q0);
    if (aq > q_ceiling) throw std::domain_error("series too slow");
    if (query.tol <= 0) throw std::invalid_argument("tolerance must be positive");

    unsigned d = query.chi.modulus();
    std::vector<std::complex<double>> chi_c(d);
    for (unsigned k = 0; k < d; ++k) chi_c[k] = query.chi(k).to_complex();

    std::complex<double> two_q = 1.0 + query.q0;
    double abs_two_q = std::abs(two_q);
    double x = query.x.to_double();
    double sigma = query.s.real();
    double growth = std::max(-sigma, 0.0);  // polynomial growth exponent of |(n+x)^{-s}|
    double r = (1.0 + aq) / 2.0;
    double geom = r / (1.0 - r);

    std::complex<double> sum(0.0, 0.0);
    std::complex<double> qpow(1.0, 0.0);
    double aqpow = 1.0;
    for (long k = 0;; ++k) {
        if (k > 20000000) throw std::domain_error("series too slow");
        double base = x + static_cast<double>(k);
        std::complex<double> p = std::exp(-query.s * std::log(base));
        sum += two_q * chi_c[k % d] * qpow * p;
        double bound_k = abs_two_q * aqpow * std::pow(base, -sigma);
        double ratio = aq * std::pow((base + 1.0) / base, growth);
        if (ratio <= r && bound_k * geom <= query.tol)
            return {sum, bound_k * geom, k + 1};
        qpow *= -query.q0;
        aqpow *= aq;
    }
}

struct InterpolationReport {
    bool pass = false;
    std::complex<double> series_value;
    std::complex<double> exact_value;
    double tail_bound = 0.0;
    long terms_used = 0;
};

/// Checks L_{E,q}(-k, chi | x) = E_{k,chi,q}(x): the series at s = -k against
/// the exact polynomial evaluated numerically at the same q.
inline InterpolationReport verify_interpolation_report(unsigned k, const DirichletChar& chi,
                                                       const Rational& x, std::complex<double> q0,
                                                       double tol) {
    LQuery query{std::complex<double>(-static_cast<double>(k), 0.0), chi, x, q0, tol};
    SeriesEstimate est = l_eval(query);
    QEulerSession session(chi);
    std::complex<double> exact = poly_eval(session.gen_q_euler_poly(k), x).eval_complex(q0);
    InterpolationReport rep;
    rep.series_value = est.value;
    rep.exact_value = exact;
    rep.tail_bound = est.tail_bound;
    rep.terms_used = est.terms_used;
    rep.pass = std::abs(est.value - exact) <= tol + est.tail_bound;
    return rep;
}

inline bool verify_interpolation(unsigned k, const DirichletChar& chi, const Rational& x,
                                 std::complex<double> q0, double tol) {
    return verify_interpolation_report(k, chi, x, q0, tol).pass;
}

}  // namespace qeuler
