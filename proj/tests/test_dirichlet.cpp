#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "qeuler/dirichlet.hpp"

#include <numeric>

using namespace qeuler;

TEST_CASE("enumeration counts match phi(d) and the cyclic brute force") {
    CHECK(enumerate_chars(1).size() == 1);
    // oracle: homomorphism count on the cyclic unit group <2 mod 3>, <2 mod 9>
    CHECK(testsupport::cyclic_character_count_oracle(3, 2) == 2);
    CHECK(enumerate_chars(3).size() == 2);
    CHECK(testsupport::cyclic_character_count_oracle(9, 2) == 6);
    CHECK(enumerate_chars(9).size() == 6);
    for (unsigned d : {5u, 7u, 15u, 45u}) CHECK(enumerate_chars(d).size() == euler_phi(d));
    CHECK_THROWS_WITH_AS(enumerate_chars(6), "modulus must be odd", std::invalid_argument);
}

TEST_CASE("the d = 1 character is identically one, including at zero") {
    DirichletChar chi = trivial_char();
    CHECK(chi.modulus() == 1);
    CHECK(chi(0) == Cyclotomic(1));
    CHECK(chi(-17) == Cyclotomic(1));
    CHECK(chi.is_principal());
    CHECK(chi.order() == 1);
}

TEST_CASE("char_eval examples mod 3") {
    auto chars = enumerate_chars(3);
    REQUIRE(chars.size() == 2);
    CHECK(chars[0].is_principal());
    const DirichletChar& chi = chars[1];
    CHECK_FALSE(chi.is_principal());
    CHECK(chi(2) == Cyclotomic(-1));
    CHECK(chi(0) == Cyclotomic(0));
    CHECK(chi(4) == Cyclotomic(1));  // periodicity
    CHECK(chi.order() == 2);
}

TEST_CASE("index 0 is principal for every modulus") {
    for (unsigned d : {1u, 3u, 5u, 7u, 9u, 15u}) {
        auto chars = enumerate_chars(d);
        CHECK(chars[0].is_principal());
        for (size_t i = 1; i < chars.size(); ++i) CHECK_FALSE(chars[i].is_principal());
    }
}

TEST_CASE("values vanish exactly off the units and lie on the unit circle") {
    for (unsigned d : {3u, 9u, 15u}) {
        for (const auto& chi : enumerate_chars(d)) {
            for (unsigned k = 0; k < d; ++k) {
                if (std::gcd(k, d) > 1) {
                    CHECK(chi(k).is_zero());
                } else {
                    CHECK(!chi(k).is_zero());
                    CHECK(std::abs(std::abs(chi(k).to_complex()) - 1.0) < 1e-12);
                }
            }
            CHECK(chi(1) == Cyclotomic(1));
        }
    }
}

TEST_CASE("orthogonality: unit sum vanishes except for the principal character") {
    for (unsigned d : {1u, 3u, 5u, 7u, 9u, 15u}) {
        for (const auto& chi : enumerate_chars(d)) {
            Cyclotomic sum(0);
            for (unsigned k = 0; k < d; ++k) sum += chi(k);
            if (chi.is_principal() && d > 1)
                CHECK(sum == Cyclotomic(Rational(static_cast<long>(euler_phi(d)))));
            else if (d == 1)
                CHECK(sum == Cyclotomic(1));
            else
                CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("complete multiplicativity on units") {
    for (unsigned d : {3u, 5u, 7u, 9u, 15u}) {
        for (const auto& chi : enumerate_chars(d)) {
            for (unsigned k = 0; k < d; ++k) {
                for (unsigned l = 0; l < d; ++l) {
                    if (std::gcd(k * l, d) != 1) continue;
                    CHECK(chi(static_cast<long long>(k) * l) == chi(k) * chi(l));
                }
            }
        }
    }
}

TEST_CASE("the enumerated set is a group of order phi(d) under pointwise product") {
    for (unsigned d : {3u, 5u, 9u, 15u}) {
        auto chars = enumerate_chars(d);
        for (const auto& a : chars) {
            for (const auto& b : chars) {
                // pointwise product table
                std::vector<Cyclotomic> prod(d, Cyclotomic(0));
                for (unsigned k = 0; k < d; ++k) prod[k] = a(k) * b(k);
                int hits = 0;
                for (const auto& c : chars) {
                    bool same = true;
                    for (unsigned k = 0; k < d && same; ++k) same = (c(k) == prod[k]);
                    hits += same;
                }
                CHECK(hits == 1);
            }
        }
    }
}

TEST_CASE("character order divides the exponent of the unit group") {
    for (unsigned d : {3u, 5u, 7u, 9u, 15u, 45u}) {
        auto chars = enumerate_chars(d);
        // exponent of (Z/d)^* = lcm of value orders of all characters
        for (const auto& chi : chars) {
            // chi^order is principal; chi^k is not, for 0 < k < order
            for (unsigned k = 1; k < chi.order(); ++k) {
                bool principal = true;
                for (unsigned u = 0; u < d && principal; ++u) {
                    if (std::gcd(u, d) != 1) continue;
                    Cyclotomic pw(1);
                    for (unsigned i = 0; i < k; ++i) pw *= chi(u);
                    principal = (pw == Cyclotomic(1));
                }
                CHECK_FALSE(principal);
            }
            Cyclotomic pw(1);
            bool principal = true;
            for (unsigned u = 0; u < d && principal; ++u) {
                if (std::gcd(u, d) != 1) continue;
                Cyclotomic acc(1);
                for (unsigned i = 0; i < chi.order(); ++i) acc *= chi(u);
                principal = (acc == Cyclotomic(1));
            }
            CHECK(principal);
        }
    }
}

TEST_CASE("selection by (modulus, index) is stable") {
    DirichletChar a = dirichlet_char(9, 3);
    DirichletChar b = dirichlet_char(9, 3);
    CHECK(a == b);
    CHECK(a.index() == 3);
    CHECK_THROWS_AS(dirichlet_char(9, 6), std::invalid_argument);
}
