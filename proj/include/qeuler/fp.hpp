#pragma once

#include "qeuler/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qeuler::fp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }
inline u64 addmod(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p || s < a ? s - p : s; }
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// The attempt-th prime p = 1 (mod M) scanning down from near 2^62.
inline u64 find_prime_1mod(unsigned M, unsigned attempt) {
    u64 k = ((u64(1) << 62) / M) - 1 - u64(attempt) * 7919;
    for (;; --k) {
        u64 p = k * M + 1;
        if (is_prime_u64(p)) return p;
    }
}

inline std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// An element of multiplicative order exactly M in F_p (requires M | p-1).
inline u64 element_of_order(unsigned M, u64 p, u64& seed) {
    if (M == 1) return 1;
    auto factors = prime_factors(M);
    for (;;) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        u64 r = seed % (p - 2) + 2;
        u64 w = powmod(r, (p - 1) / M, p);
        if (w == 1) continue;
        bool exact = true;
        for (unsigned ell : factors)
            if (powmod(w, M / ell, p) == 1) { exact = false; break; }
        if (exact) return w;
    }
}

/// Image of a rational mod p; nullopt when the denominator vanishes mod p.
inline std::optional<u64> rational_mod_p(const Rational& r, u64 p) {
    Int pp(static_cast<unsigned long>(p));
    Int den = r.denominator() % pp;
    if (den == 0) return std::nullopt;
    Int num = r.numerator() % pp;
    if (num < 0) num += pp;
    u64 n = num.get_ui(), d = den.get_ui();
    return mulmod(n, invmod(d, p), p);
}

/// Wang rational reconstruction: the unique a/b = u (mod p) with
/// |a|, b <= floor(sqrt(p/2)), if one exists.
inline bool rational_reconstruct(u64 u, u64 p, Int& num_out, Int& den_out) {
    Int bound;
    {
        Int half(static_cast<unsigned long>(p >> 1));
        mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    }
    Int r0(static_cast<unsigned long>(p)), r1(static_cast<unsigned long>(u));
    Int t0(0), t1(1);
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (t1 == 0) return false;
    if (t1 < 0) { t1 = -t1; r1 = -r1; }
    if (t1 > bound) return false;
    if (int_gcd(r1, t1) != 1) return false;
    num_out = std::move(r1);
    den_out = std::move(t1);
    return true;
}

/// Monic gcd in F_p[x]; vectors are ascending coefficients, trimmed.
inline std::vector<u64> poly_gcd_modp(std::vector<u64> a, std::vector<u64> b, u64 p) {
    auto trim = [](std::vector<u64>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        u64 lead_inv = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            u64 f = mulmod(a.back(), lead_inv, p);
            size_t off = a.size() - b.size();
            if (f != 0)
                for (size_t j = 0; j + 1 < b.size(); ++j)
                    a[off + j] = submod(a[off + j], mulmod(f, b[j], p), p);
            a.pop_back();
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

}  // namespace qeuler::fp
