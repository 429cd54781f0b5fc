#pragma once

#include "aqlink/poly.hpp"

namespace aqlink {

/// Laurent polynomial over Z_p: num * t^lo with num a DensePoly whose
/// constant term is nonzero (unless the whole thing is zero, then lo = 0).
struct LaurentPoly {
    int lo = 0;
    DensePoly num;

    LaurentPoly() = default;
    explicit LaurentPoly(PrimeModulus m) : num(m) {}
    LaurentPoly(int lowest, DensePoly f) : lo(lowest), num(std::move(f)) { canonicalize_support(); }

    void canonicalize_support() {
        if (num.is_zero()) { lo = 0; return; }
        size_t shift = 0;
        while (shift < num.c.size() && num.c[shift] == 0) ++shift;
        if (shift > 0) {
            num.c.erase(num.c.begin(), num.c.begin() + static_cast<long>(shift));
            lo += static_cast<int>(shift);
        }
    }

    PrimeModulus mod() const { return num.mod; }
    bool is_zero() const { return num.is_zero(); }
    int lowest_exponent() const { return lo; }
    int highest_exponent() const { return lo + num.degree(); }
    bool operator==(const LaurentPoly& o) const { return lo == o.lo && num == o.num; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
};

/// br f: difference between highest and lowest exponent; br 0 = 0.
inline int breadth(const LaurentPoly& f) { return f.is_zero() ? 0 : f.num.degree(); }

inline LaurentPoly laurent_from_poly(const DensePoly& f) { return LaurentPoly(0, f); }

/// The canonical associate under the unit group of Lambda_p: the unique
/// monic polynomial with nonzero constant term generating the same ideal.
inline DensePoly laurent_normalize(const LaurentPoly& f) {
    return poly_make_monic(f.num);
}

inline LaurentPoly laurent_add(const LaurentPoly& f, const LaurentPoly& g) {
    require_same_mod(f.num, g.num);
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    int lo = std::min(f.lo, g.lo);
    int hi = std::max(f.highest_exponent(), g.highest_exponent());
    DensePoly sum(f.num.mod);
    sum.c.assign(static_cast<size_t>(hi - lo) + 1, 0);
    for (int i = 0; i <= f.num.degree(); ++i)
        sum.c[static_cast<size_t>(f.lo + i - lo)] = f.num.c[static_cast<size_t>(i)];
    for (int i = 0; i <= g.num.degree(); ++i) {
        size_t k = static_cast<size_t>(g.lo + i - lo);
        sum.c[k] = sum.mod.add(sum.c[k], g.num.c[static_cast<size_t>(i)]);
    }
    sum.trim();
    return LaurentPoly(lo, std::move(sum));
}

inline LaurentPoly laurent_neg(const LaurentPoly& f) { return LaurentPoly(f.lo, poly_neg(f.num)); }

inline LaurentPoly laurent_sub(const LaurentPoly& f, const LaurentPoly& g) {
    return laurent_add(f, laurent_neg(g));
}

inline LaurentPoly laurent_mul(const LaurentPoly& f, const LaurentPoly& g) {
    return LaurentPoly(f.lo + g.lo, poly_mul(f.num, g.num));
}

inline LaurentPoly laurent_scale_unit(const LaurentPoly& f, uint32_t a, int k) {
    return LaurentPoly(f.lo + k, poly_scale(f.num, a));
}

/// Divisibility in Lambda_p (units discarded on both sides).
inline bool laurent_divides(const LaurentPoly& d, const LaurentPoly& f) {
    if (d.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    return poly_divides(d.num, f.num);
}

/// Associate test: f and g generate the same ideal of Lambda_p.
inline bool laurent_associate(const LaurentPoly& f, const LaurentPoly& g) {
    return laurent_normalize(f) == laurent_normalize(g);
}

/// f(t) -> f(t^z), z >= 0 (z = 0 evaluates at 1).
inline LaurentPoly laurent_subst_power(const LaurentPoly& f, long long z) {
    if (z < 0) throw error("laurent_subst_power expects z >= 0");
    if (f.is_zero()) return f;
    return LaurentPoly(static_cast<int>(f.lo * z), poly_subst_power(f.num, z));
}

} // namespace aqlink
