#pragma once

#include <map>
#include <random>

#include "aqlink/poly.hpp"

namespace aqlink {

/// Seed for the equal-degree splitting PRNG. Fixed so factor lists are
/// reproducible across runs; tests freeze outputs against it.
inline constexpr uint64_t kFactorSeed = 0x9e3779b97f4a7c15ULL;

/// Distinct-degree sieve (Rabin): f of degree n is irreducible over Z_p iff
/// t^(p^n) = t mod f and gcd(t^(p^(n/l)) - t, f) = 1 for every prime l | n.
inline bool is_irreducible(const DensePoly& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const DensePoly t = poly_t(f.mod);
    const DensePoly fm = poly_make_monic(f);
    // prime divisors of n
    std::vector<int> ls;
    int m = n;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            ls.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) ls.push_back(m);
    // t^(p^k) mod f by iterating the p-power map
    auto frobenius_iterate = [&](int k) {
        DensePoly x = t;
        for (int i = 0; i < k; ++i) x = poly_powmod(x, f.mod.p, fm);
        return x;
    };
    for (int l : ls) {
        DensePoly x = frobenius_iterate(n / l);
        DensePoly g = poly_gcd(poly_sub(x, t), fm);
        if (!g.is_one()) return false;
    }
    DensePoly x = frobenius_iterate(n);
    return poly_sub(x, t).is_zero();
}

/// Squarefree decomposition in characteristic p: returns pairs
/// (monic squarefree factor, multiplicity) with product = monic(f).
inline std::vector<std::pair<DensePoly, int>> squarefree_decomposition(const DensePoly& f0) {
    if (f0.is_zero()) throw error("squarefree decomposition of zero");
    std::map<int, DensePoly> parts; // multiplicity -> factor (merged by multiplication)
    struct Item { DensePoly f; int mult; };
    std::vector<Item> stack{{poly_make_monic(f0), 1}};
    const uint32_t p = f0.mod.p;
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        DensePoly f = it.f;
        if (f.degree() <= 0) continue;
        DensePoly df = poly_derivative(f);
        if (df.is_zero()) {
            // f = g(t^p); take p-th root coefficientwise (Frobenius fixes Z_p)
            DensePoly g(f.mod);
            g.c.resize(static_cast<size_t>(f.degree() / static_cast<int>(p)) + 1);
            for (size_t i = 0; i < g.c.size(); ++i) g.c[i] = f.c[i * p];
            g.trim();
            stack.push_back({g, it.mult * static_cast<int>(p)});
            continue;
        }
        DensePoly c = poly_gcd(f, df);
        DensePoly w = poly_div(f, c); // squarefree part with multiplicity-1 content
        int i = 1;
        while (!w.is_one()) {
            DensePoly y = poly_gcd(w, c);
            DensePoly fac = poly_div(w, y);
            if (fac.degree() > 0) {
                auto [pos, inserted] = parts.emplace(it.mult * i, fac);
                if (!inserted) pos->second = poly_mul(pos->second, fac);
            }
            w = y;
            c = poly_div(c, y);
            ++i;
        }
        if (c.degree() > 0) stack.push_back({c, it.mult});
    }
    std::vector<std::pair<DensePoly, int>> out;
    for (auto& [mult, fac] : parts) out.emplace_back(fac, mult);
    return out;
}

/// Distinct-degree factorization of a monic squarefree f:
/// pairs (product of irreducible factors of degree d, d).
inline std::vector<std::pair<DensePoly, int>> distinct_degree_split(const DensePoly& f) {
    std::vector<std::pair<DensePoly, int>> out;
    DensePoly rest = f;
    DensePoly x = poly_rem(poly_t(f.mod), rest);
    int d = 0;
    while (rest.degree() > 2 * (d + 1) - 1 && !rest.is_one()) {
        ++d;
        x = poly_powmod(x, f.mod.p, rest);
        DensePoly g = poly_gcd(poly_sub(x, poly_t(f.mod)), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = poly_div(rest, g);
            x = poly_rem(x, rest);
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting (p odd), deterministic via rng.
inline void equal_degree_split(const DensePoly& f, int d, std::mt19937_64& rng,
                               std::vector<DensePoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const PrimeModulus mod = f.mod;
    // exponent (p^d - 1)/2 as a u64 chain; p^d can overflow for huge inputs,
    // but splitting only happens when f has >= 2 factors of degree d, which
    // keeps d small for all desk-scale uses. Guard anyway.
    long double approx = 1;
    for (int i = 0; i < d; ++i) approx *= mod.p;
    if (approx > 9e18) throw error("equal-degree splitting out of supported range");
    uint64_t e = 1;
    for (int i = 0; i < d; ++i) e *= mod.p;
    e = (e - 1) / 2;
    while (true) {
        DensePoly r(mod);
        r.c.resize(static_cast<size_t>(f.degree()));
        for (auto& coef : r.c) coef = static_cast<uint32_t>(rng() % mod.p);
        r.trim();
        if (r.degree() < 1) continue;
        DensePoly g = poly_gcd(r, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(poly_div(f, g), d, rng, out);
            return;
        }
        DensePoly s = poly_powmod(r, e, f);
        s = poly_sub(s, poly_const(mod, 1));
        g = poly_gcd(s, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(poly_div(f, g), d, rng, out);
            return;
        }
    }
}

struct FactorList {
    uint32_t unit = 1; // leading coefficient of the input
    std::vector<std::pair<DensePoly, int>> factors; // monic irreducible, multiplicity
};

/// Full factorization over Z_p: unit * prod factors^mult reproduces f.
/// Deterministic: fixed PRNG seed, factors sorted by (degree, coeffs).
inline FactorList poly_factor(const DensePoly& f) {
    if (f.is_zero()) throw error("cannot factor the zero polynomial");
    FactorList out;
    out.unit = f.lead();
    if (f.degree() == 0) return out;
    std::map<std::vector<uint32_t>, int> found; // coeffs -> multiplicity
    std::mt19937_64 rng(kFactorSeed);
    for (auto& [sqf, mult] : squarefree_decomposition(f)) {
        for (auto& [prod, d] : distinct_degree_split(sqf)) {
            std::vector<DensePoly> irr;
            equal_degree_split(prod, d, rng, irr);
            for (auto& g : irr) found[g.c] += mult;
        }
    }
    for (auto& [coeffs, mult] : found)
        out.factors.emplace_back(DensePoly(f.mod, coeffs), mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_order_less(a.first, b.first); });
    return out;
}

/// Factor a Laurent polynomial by its canonical associate; the t^k unit and
/// scalar unit are dropped.
inline FactorList laurent_factor(const LaurentPoly& f) {
    if (f.is_zero()) throw error("cannot factor the zero polynomial");
    FactorList fl = poly_factor(laurent_normalize(f));
    fl.unit = 1;
    return fl;
}

} // namespace aqlink
