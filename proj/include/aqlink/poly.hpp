#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "aqlink/zmod.hpp"

namespace aqlink {

/// Dense univariate polynomial over Z_p, coefficients lowest degree first.
/// Invariant: coeffs is empty (the zero polynomial) or the last entry is nonzero.
struct DensePoly {
    PrimeModulus mod;
    std::vector<uint32_t> c;

    DensePoly() = default;
    explicit DensePoly(PrimeModulus m) : mod(m) {}
    DensePoly(PrimeModulus m, std::vector<uint32_t> coeffs) : mod(m), c(std::move(coeffs)) {
        for (auto& x : c) x %= mod.p;
        trim();
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    uint32_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
    }
    uint32_t lead() const { return c.empty() ? 0 : c.back(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    bool is_constant() const { return c.size() <= 1; }
    bool is_monic() const { return lead() == 1; }

    bool operator==(const DensePoly& o) const { return mod.p == o.mod.p && c == o.c; }
    bool operator!=(const DensePoly& o) const { return !(*this == o); }
};

inline void require_same_mod(const DensePoly& f, const DensePoly& g) {
    if (f.mod.p != g.mod.p) throw error("modulus mismatch between polynomials");
}

inline DensePoly poly_zero(PrimeModulus m) { return DensePoly(m); }
inline DensePoly poly_const(PrimeModulus m, long long v) {
    return DensePoly(m, {m.reduce(v)});
}
inline DensePoly poly_t(PrimeModulus m) { return DensePoly(m, {0, 1}); }

/// Monomial c * t^k, k >= 0.
inline DensePoly poly_monomial(PrimeModulus m, uint32_t coeff, int k) {
    std::vector<uint32_t> v(static_cast<size_t>(k) + 1, 0);
    v[static_cast<size_t>(k)] = coeff % m.p;
    return DensePoly(m, std::move(v));
}

inline DensePoly poly_add(const DensePoly& f, const DensePoly& g) {
    require_same_mod(f, g);
    DensePoly r(f.mod);
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = f.mod.add(f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

inline DensePoly poly_sub(const DensePoly& f, const DensePoly& g) {
    require_same_mod(f, g);
    DensePoly r(f.mod);
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = f.mod.sub(f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

inline DensePoly poly_neg(const DensePoly& f) {
    DensePoly r = f;
    for (auto& x : r.c) x = f.mod.neg(x);
    return r;
}

inline DensePoly poly_scale(const DensePoly& f, uint32_t s) {
    DensePoly r = f;
    for (auto& x : r.c) x = f.mod.mul(x, s);
    r.trim();
    return r;
}

inline DensePoly poly_mul(const DensePoly& f, const DensePoly& g) {
    require_same_mod(f, g);
    if (f.is_zero() || g.is_zero()) return DensePoly(f.mod);
    const uint64_t p = f.mod.p;
    std::vector<uint64_t> acc(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        for (size_t j = 0; j < g.c.size(); ++j) {
            acc[i + j] += static_cast<uint64_t>(f.c[i]) * g.c[j] % p;
            if (acc[i + j] >= (uint64_t(1) << 62)) acc[i + j] %= p;
        }
    }
    DensePoly r(f.mod);
    r.c.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r.c[i] = static_cast<uint32_t>(acc[i] % p);
    r.trim();
    return r;
}

inline DensePoly poly_make_monic(const DensePoly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return poly_scale(f, f.mod.inv(f.lead()));
}

/// Euclidean division: f = q*g + r with deg r < deg g.
inline std::pair<DensePoly, DensePoly> poly_divmod(const DensePoly& f, const DensePoly& g) {
    require_same_mod(f, g);
    if (g.is_zero()) throw error("polynomial division by zero");
    DensePoly r = f;
    DensePoly q(f.mod);
    if (f.degree() < g.degree()) return {q, r};
    q.c.assign(static_cast<size_t>(f.degree() - g.degree()) + 1, 0);
    const uint32_t inv_lead = f.mod.inv(g.lead());
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int shift = r.degree() - g.degree();
        uint32_t factor = f.mod.mul(r.lead(), inv_lead);
        q.c[static_cast<size_t>(shift)] = factor;
        for (int i = 0; i <= g.degree(); ++i) {
            size_t k = static_cast<size_t>(i + shift);
            r.c[k] = f.mod.sub(r.c[k], f.mod.mul(factor, g.c[static_cast<size_t>(i)]));
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

inline DensePoly poly_rem(const DensePoly& f, const DensePoly& g) { return poly_divmod(f, g).second; }
inline DensePoly poly_div(const DensePoly& f, const DensePoly& g) { return poly_divmod(f, g).first; }

inline bool poly_divides(const DensePoly& d, const DensePoly& f) {
    if (d.is_zero()) return f.is_zero();
    return poly_rem(f, d).is_zero();
}

/// Monic GCD; gcd(0,0) = 0.
inline DensePoly poly_gcd(DensePoly f, DensePoly g) {
    require_same_mod(f, g);
    while (!g.is_zero()) {
        DensePoly r = poly_rem(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return poly_make_monic(f);
}

/// Extended GCD: returns (g, u, v) monic with u*f + v*g0 = g.
inline std::array<DensePoly, 3> poly_xgcd(const DensePoly& f, const DensePoly& g0) {
    require_same_mod(f, g0);
    DensePoly a = f, b = g0;
    DensePoly u0 = poly_const(f.mod, 1), v0 = poly_zero(f.mod);
    DensePoly u1 = poly_zero(f.mod), v1 = poly_const(f.mod, 1);
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        DensePoly u2 = poly_sub(u0, poly_mul(q, u1));
        DensePoly v2 = poly_sub(v0, poly_mul(q, v1));
        a = std::move(b); b = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!a.is_zero() && !a.is_monic()) {
        uint32_t s = f.mod.inv(a.lead());
        a = poly_scale(a, s);
        u0 = poly_scale(u0, s);
        v0 = poly_scale(v0, s);
    }
    return {a, u0, v0};
}

inline DensePoly poly_derivative(const DensePoly& f) {
    DensePoly r(f.mod);
    if (f.degree() < 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i)
        r.c[i - 1] = f.mod.mul(f.c[i], static_cast<uint32_t>(i % f.mod.p));
    r.trim();
    return r;
}

inline uint32_t poly_eval(const DensePoly& f, uint32_t x) {
    uint64_t acc = 0;
    for (size_t i = f.c.size(); i-- > 0;)
        acc = (acc * x + f.c[i]) % f.mod.p;
    return static_cast<uint32_t>(acc);
}

/// f(t) -> f(t^z), z >= 0. z = 0 collapses to the constant f(1).
inline DensePoly poly_subst_power(const DensePoly& f, long long z) {
    if (z < 0) throw error("poly_subst_power expects z >= 0");
    if (f.is_zero()) return f;
    if (z == 0) return poly_const(f.mod, poly_eval(f, 1));
    DensePoly r(f.mod);
    r.c.assign(static_cast<size_t>(f.degree()) * static_cast<size_t>(z) + 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i * static_cast<size_t>(z)] = f.c[i];
    r.trim();
    return r;
}

/// base^e mod m, binary exponentiation in Z_p[t].
inline DensePoly poly_powmod(const DensePoly& base, uint64_t e, const DensePoly& m) {
    DensePoly acc = poly_const(base.mod, 1);
    DensePoly b = poly_rem(base, m);
    while (e) {
        if (e & 1) acc = poly_rem(poly_mul(acc, b), m);
        b = poly_rem(poly_mul(b, b), m);
        e >>= 1;
    }
    return acc;
}

/// Deterministic ordering used wherever factor lists are emitted:
/// by degree, then lexicographically on coefficients from the top.
inline bool poly_order_less(const DensePoly& a, const DensePoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

} // namespace aqlink
