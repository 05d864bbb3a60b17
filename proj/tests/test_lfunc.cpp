#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "qeuler/lfunc.hpp"

using namespace qeuler;

TEST_CASE("l_eval: geometric value at s = 0") {
    LQuery q{0.0, trivial_char(), Rational(1), 0.3, 1e-12};
    SeriesEstimate s = l_eval(q);
    CHECK(std::abs(s.value - 1.0) <= 1e-12 + s.tail_bound);
}

TEST_CASE("l_eval at s = -1 reproduces E_{1,q}(1) = 1/(1+q)") {
    LQuery q{std::complex<double>(-1.0, 0.0), trivial_char(), Rational(1), 0.3, 1e-12};
    SeriesEstimate s = l_eval(q);
    CHECK(std::abs(s.value - 1.0 / 1.3) <= 1e-12 + s.tail_bound);
}

TEST_CASE("l_eval at q0 = 0 keeps only the n = 0 term") {
    std::complex<double> sv(0.7, 0.2);
    LQuery q1{sv, trivial_char(), Rational(1, 2), 0.0, 1e-13};
    SeriesEstimate s1 = l_eval(q1);
    std::complex<double> expected = std::exp(-sv * std::log(0.5));
    CHECK(std::abs(s1.value - expected) <= 1e-12 + s1.tail_bound);

    LQuery q3{sv, dirichlet_char(3, 1), Rational(1, 2), 0.0, 1e-13};
    SeriesEstimate s3 = l_eval(q3);
    CHECK(std::abs(s3.value) <= 1e-12 + s3.tail_bound);
}

TEST_CASE("l_eval input validation") {
    CHECK_THROWS_AS(l_eval({0.0, trivial_char(), Rational(0), 0.3, 1e-10}), std::invalid_argument);
    CHECK_THROWS_AS(l_eval({0.0, trivial_char(), Rational(-1, 2), 0.3, 1e-10}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(l_eval({0.0, trivial_char(), Rational(1), 0.99, 1e-10}), "series too slow",
                         std::domain_error);
}

TEST_CASE("interpolation at negative integers: worked cases") {
    CHECK(verify_interpolation(0, trivial_char(), Rational(1), 0.3, 1e-9));

    InterpolationReport rep = verify_interpolation_report(1, trivial_char(), Rational(1), 0.3, 1e-10);
    CHECK(rep.pass);
    CHECK(std::abs(rep.exact_value - 1.0 / 1.3) < 1e-12);
    CHECK(std::abs(rep.series_value - 1.0 / 1.3) <= 1e-10 + rep.tail_bound);
}

TEST_CASE("interpolation sweep: k <= 5, x in {1, 1/2, 3/2}, d in {1, 3, 5}") {
    const std::vector<Rational> xs = {Rational(1), Rational(1, 2), Rational(3, 2)};
    const std::vector<std::complex<double>> qs = {0.2, -0.35};
    for (unsigned d : {1u, 3u, 5u}) {
        for (const auto& chi : enumerate_chars(d)) {
            for (unsigned k = 0; k <= 5; ++k)
                for (const auto& x : xs)
                    for (auto q0 : qs) CHECK(verify_interpolation(k, chi, x, q0, 1e-9));
        }
    }
}

TEST_CASE("L(0, chi | x) agrees with the n = 0 series of the polynomial family") {
    for (unsigned d : {1u, 3u}) {
        for (const auto& chi : enumerate_chars(d)) {
            for (const Rational& x : {Rational(1), Rational(1, 2)}) {
                LQuery q{0.0, chi, x, -0.4, 1e-12};
                SeriesEstimate via_l = l_eval(q);
                SeriesEstimate via_series = series_sum(0, chi, -0.4, x, 1e-12);
                CHECK(std::abs(via_l.value - via_series.value) <=
                      via_l.tail_bound + via_series.tail_bound + 1e-12);
            }
        }
    }
}

TEST_CASE("l_eval tail honesty") {
    std::mt19937 rng(20240921);
    std::uniform_real_distribution<double> qdist(-0.6, 0.6);
    for (int i = 0; i < 20; ++i) {
        std::complex<double> q0(qdist(rng), qdist(rng) * 0.5);
        if (std::abs(q0) < 0.05) continue;
        std::complex<double> s(qdist(rng) * 4.0, qdist(rng) * 2.0);
        LQuery coarse{s, dirichlet_char(3, 1), Rational(3, 2), q0, 1e-5};
        LQuery fine{s, dirichlet_char(3, 1), Rational(3, 2), q0, 1e-12};
        SeriesEstimate c = l_eval(coarse), f = l_eval(fine);
        CHECK(std::abs(c.value - f.value) <= c.tail_bound + 1e-11);
    }
}
