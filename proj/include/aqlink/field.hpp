#pragma once

#include "aqlink/factor.hpp"
#include "aqlink/laurent.hpp"
#include "aqlink/polytext.hpp"

namespace aqlink {

/// The finite field F(p,h(t)) = Lambda_p/(h(t)) with h irreducible of
/// positive breadth, presented as Z_p[t]/(h_canonical). Elements are
/// coefficient vectors of length n = deg h (lowest degree first).
struct ExtensionField {
    PrimeModulus p;
    DensePoly h; // monic, irreducible, h(0) != 0
    int n = 0;
    uint64_t q = 0;       // p^n, saturated at uint64 max
    bool q_exact = true;  // false when p^n overflowed

    using Elem = std::vector<uint32_t>;

    Elem zero() const { return Elem(static_cast<size_t>(n), 0); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }
    Elem from_int(long long v) const {
        Elem e = zero();
        e[0] = p.reduce(v);
        return e;
    }
    Elem tbar() const { return from_poly(poly_t(p)); }

    Elem from_poly(const DensePoly& f) const {
        if (f.mod.p != p.p) throw error("field/polynomial modulus mismatch");
        DensePoly r = poly_rem(f, h);
        Elem e = zero();
        for (int i = 0; i <= r.degree(); ++i) e[static_cast<size_t>(i)] = r.c[static_cast<size_t>(i)];
        return e;
    }

    /// Image of a Laurent polynomial: f(tbar); t is invertible since h(0) != 0.
    Elem from_laurent(const LaurentPoly& f) const {
        if (f.is_zero()) return zero();
        Elem v = from_poly(f.num);
        if (f.lo != 0) v = mul(v, pow_tbar(f.lo));
        return v;
    }
    Elem from_laurent(const ZLaurent& f) const { return from_laurent(reduce_mod_p(f, p)); }

    DensePoly to_poly(const Elem& e) const {
        DensePoly f(p);
        f.c.assign(e.begin(), e.end());
        f.trim();
        return f;
    }

    bool is_zero(const Elem& e) const {
        for (uint32_t x : e)
            if (x) return false;
        return true;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (size_t i = 0; i < r.size(); ++i) r[i] = p.add(r[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (size_t i = 0; i < r.size(); ++i) r[i] = p.sub(r[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& x : r) x = p.neg(x);
        return r;
    }
    Elem scale(const Elem& a, uint32_t s) const {
        Elem r = a;
        for (auto& x : r) x = p.mul(x, s);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (n == 1) {
            Elem r = zero();
            r[0] = p.mul(a[0], b[0]);
            return r;
        }
        return from_poly(poly_mul(to_poly(a), to_poly(b)));
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw error("field inverse of zero");
        auto [g, u, v] = poly_xgcd(to_poly(a), h);
        if (!g.is_one()) throw error("internal: non-invertible element, h not irreducible?");
        return from_poly(u);
    }
    Elem pow(Elem base, uint64_t e) const {
        Elem acc = one();
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    /// tbar^m for any integer m (negative uses the inverse).
    Elem pow_tbar(long long m) const {
        if (m >= 0) return pow(tbar(), static_cast<uint64_t>(m));
        return pow(inv(tbar()), static_cast<uint64_t>(-m));
    }

    /// Deterministic enumeration of all q elements (odometer, lowest digit first).
    template <class F>
    void for_each_element(F&& fn) const {
        Elem e = zero();
        while (true) {
            fn(const_cast<const Elem&>(e));
            size_t i = 0;
            while (i < e.size()) {
                if (++e[i] < p.p) break;
                e[i] = 0;
                ++i;
            }
            if (i == e.size()) return;
        }
    }

    bool operator==(const ExtensionField& o) const { return p.p == o.p.p && h == o.h; }
    bool operator!=(const ExtensionField& o) const { return !(*this == o); }

    std::string describe() const {
        return "F(" + std::to_string(p.p) + ", " + to_text(h) + ")";
    }
};

/// Builds F(p,h(t)) from any Laurent representative of h.
/// Errors: zero/constant h (breadth 0), reducible h.
inline ExtensionField build_extension_field(PrimeModulus p, const LaurentPoly& h_in) {
    if (h_in.is_zero() || breadth(h_in) == 0)
        throw error("h(t) must have positive breadth");
    DensePoly h = laurent_normalize(h_in);
    if (!is_irreducible(h))
        throw error("h(t) = " + to_text(h) + " is reducible over Z_" + std::to_string(p.p));
    ExtensionField F;
    F.p = p;
    F.h = h;
    F.n = h.degree();
    F.q = 1;
    for (int i = 0; i < F.n; ++i) {
        if (F.q > UINT64_MAX / p.p) {
            F.q = UINT64_MAX;
            F.q_exact = false;
            break;
        }
        F.q *= p.p;
    }
    return F;
}

inline ExtensionField build_extension_field(uint32_t p, const std::string& h_text) {
    PrimeModulus pm(p);
    return build_extension_field(pm, parse_laurent_mod(h_text, pm));
}

/// q^d as an exact decimal string (schoolbook bignum, used only for reports).
inline std::string power_decimal_string(uint64_t q, int d) {
    std::vector<uint32_t> digits{1}; // little-endian base 10^9
    auto mul_small = [&](uint64_t m) {
        uint64_t carry = 0;
        for (auto& dg : digits) {
            unsigned __int128 cur = static_cast<unsigned __int128>(dg) * m + carry;
            dg = static_cast<uint32_t>(cur % 1000000000u);
            carry = static_cast<uint64_t>(cur / 1000000000u);
        }
        while (carry) {
            digits.push_back(static_cast<uint32_t>(carry % 1000000000u));
            carry /= 1000000000u;
        }
    };
    for (int i = 0; i < d; ++i) mul_small(q);
    std::string s = std::to_string(digits.back());
    for (size_t i = digits.size() - 1; i-- > 0;) {
        std::string part = std::to_string(digits[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

} // namespace aqlink
