#pragma once

#include "qeuler/fp.hpp"
#include "qeuler/poly.hpp"

#include <map>
#include <numeric>
#include <optional>

namespace qeuler {

namespace detail {

struct ModEmbedding {
    fp::u64 p;
    fp::u64 omega;  // multiplicative order exactly M in F_p
    unsigned M;
};

/// Base embeddings Q(zeta_M) -> F_p for p = 1 (mod M), cached per M. The
/// phi(M) conjugate embeddings send zeta_M to omega^t, gcd(t, M) = 1.
inline const ModEmbedding& mod_embedding(unsigned M, unsigned attempt) {
    thread_local std::map<unsigned, std::vector<ModEmbedding>> cache;
    thread_local fp::u64 seed = 0x9e3779b97f4a7c15ull;
    auto& list = cache[M];
    while (list.size() <= attempt) {
        fp::u64 p = fp::find_prime_1mod(M, static_cast<unsigned>(list.size()));
        fp::u64 w = fp::element_of_order(M, p, seed);
        list.push_back({p, w, M});
    }
    return list[attempt];
}

inline std::vector<unsigned> units_mod(unsigned M) {
    if (M <= 2) return {1};
    std::vector<unsigned> out;
    for (unsigned t = 1; t < M; ++t)
        if (std::gcd(t, M) == 1) out.push_back(t);
    return out;
}

/// Image of f under zeta_M -> zeta_img, a/b -> ab^{-1}. nullopt when a
/// denominator vanishes mod p or the leading coefficient maps to zero.
inline std::optional<std::vector<fp::u64>> poly_mod_p(const PolyQ& f, unsigned M, fp::u64 zeta_img,
                                                      fp::u64 p) {
    std::vector<fp::u64> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        unsigned stride = M / c.order();
        fp::u64 zeta = fp::powmod(zeta_img, stride, p);
        fp::u64 zpow = 1, val = 0;
        for (const auto& coord : c.coords()) {
            if (!coord.is_zero()) {
                auto img = fp::rational_mod_p(coord, p);
                if (!img) return std::nullopt;
                val = fp::addmod(val, fp::mulmod(*img, zpow, p), p);
            }
            zpow = fp::mulmod(zpow, zeta, p);
        }
        out.push_back(val);
    }
    if (!out.empty() && out.back() == 0) return std::nullopt;  // degree dropped
    return out;
}

/// Solve the phi(M) x phi(M) system V x = rhs mod p, where
/// V[row][k] = (omega^{t_row})^k ranges over the conjugate embeddings.
/// V is invertible whenever p is unramified in Q(zeta_M), which p = 1 (mod M)
/// guarantees.
inline std::optional<std::vector<fp::u64>> solve_embedding_system(
    std::vector<std::vector<fp::u64>> V, std::vector<fp::u64> rhs, fp::u64 p) {
    size_t n = V.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && V[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(V[pivot], V[col]);
        std::swap(rhs[pivot], rhs[col]);
        fp::u64 inv = fp::invmod(V[col][col], p);
        for (size_t j = col; j < n; ++j) V[col][j] = fp::mulmod(V[col][j], inv, p);
        rhs[col] = fp::mulmod(rhs[col], inv, p);
        for (size_t row = 0; row < n; ++row) {
            if (row == col || V[row][col] == 0) continue;
            fp::u64 f = V[row][col];
            for (size_t j = col; j < n; ++j)
                V[row][j] = fp::submod(V[row][j], fp::mulmod(f, V[col][j], p), p);
            rhs[row] = fp::submod(rhs[row], fp::mulmod(f, rhs[col], p), p);
        }
    }
    return rhs;
}

/// Plain monic Euclid over the exact coefficient field; correct everywhere,
/// used as the last resort when the modular lift cannot be verified.
inline PolyQ poly_gcd_fallback(PolyQ a, PolyQ b) { return poly_gcd_euclid(std::move(a), std::move(b)); }

}  // namespace detail

/// Monic gcd in Q(zeta)[q].
///
/// One good modular image certifies coprimality outright (the image gcd
/// degree bounds the true gcd degree from above). Nontrivial gcds are
/// recovered from the images under all phi(M) conjugate embeddings: the
/// tuple of images of each coefficient determines its power-basis
/// coordinates through a linear solve mod p, and rational reconstruction
/// lifts them to Q. A candidate that exactly divides both inputs and has
/// the image degree is provably the gcd; anything else retries with a new
/// prime and finally falls back to exact Euclid.
inline PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return PolyQ(Cyclotomic(1));

    const PolyQ& hi = a.degree() >= b.degree() ? a : b;
    const PolyQ& lo = a.degree() >= b.degree() ? b : a;

    if (lo.degree() <= 8) return detail::poly_gcd_euclid(hi, lo);

    // Frequent in practice: one argument divides the other outright.
    if ((hi % lo).is_zero()) return lo.monic();

    unsigned M = std::lcm(a.common_order(), b.common_order());
    auto units = detail::units_mod(M);
    unsigned phi = static_cast<unsigned>(units.size());

    for (unsigned attempt = 0; attempt < 4; ++attempt) {
        const auto& emb = detail::mod_embedding(M, attempt);

        std::vector<std::vector<fp::u64>> gcd_images;
        gcd_images.reserve(phi);
        bool bad = false;
        for (unsigned t : units) {
            fp::u64 zi = fp::powmod(emb.omega, t, emb.p);
            auto ia = detail::poly_mod_p(a, M, zi, emb.p);
            auto ib = detail::poly_mod_p(b, M, zi, emb.p);
            if (!ia || !ib) { bad = true; break; }
            auto g = fp::poly_gcd_modp(std::move(*ia), std::move(*ib), emb.p);
            if (g.size() == 1) return PolyQ(Cyclotomic(1));  // coprime, certified
            gcd_images.push_back(std::move(g));
        }
        if (bad) continue;

        size_t e = gcd_images[0].size();
        bool uniform = true;
        for (const auto& g : gcd_images) uniform = uniform && g.size() == e;
        if (!uniform) continue;  // some embedding reduced unluckily

        // recover each coefficient's power-basis coordinates at order M
        std::vector<std::vector<fp::u64>> V(phi, std::vector<fp::u64>(phi));
        for (unsigned row = 0; row < phi; ++row) {
            fp::u64 zi = fp::powmod(emb.omega, units[row], emb.p);
            fp::u64 zpow = 1;
            for (unsigned k = 0; k < phi; ++k) {
                V[row][k] = zpow;
                zpow = fp::mulmod(zpow, zi, emb.p);
            }
        }
        std::vector<Cyclotomic> coeffs;
        coeffs.reserve(e);
        bool lifted = true;
        for (size_t i = 0; i < e && lifted; ++i) {
            std::vector<fp::u64> rhs(phi);
            for (unsigned row = 0; row < phi; ++row) rhs[row] = gcd_images[row][i];
            auto sol = detail::solve_embedding_system(V, std::move(rhs), emb.p);
            if (!sol) { lifted = false; break; }
            std::vector<Rational> coords(phi);
            for (unsigned k = 0; k < phi; ++k) {
                Int num, den;
                if (!fp::rational_reconstruct((*sol)[k], emb.p, num, den)) { lifted = false; break; }
                coords[k] = Rational(num, den);
            }
            if (!lifted) break;
            coeffs.push_back(Cyclotomic::from_coords(M, std::move(coords)).compressed());
        }
        if (!lifted) continue;

        PolyQ cand(std::move(coeffs));
        if (cand.degree() == static_cast<int>(e) - 1 && a.divisible_by(cand) && b.divisible_by(cand))
            return cand;
    }
    return detail::poly_gcd_fallback(a, b);
}

}  // namespace qeuler
