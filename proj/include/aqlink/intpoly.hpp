#pragma once

#include <cstdlib>
#include <numeric>
#include <vector>

#include "aqlink/laurent.hpp"

namespace aqlink {

inline long long checked_add_ll(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw error("integer overflow in polynomial arithmetic");
    return r;
}
inline long long checked_mul_ll(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw error("integer overflow in polynomial arithmetic");
    return r;
}

/// Dense polynomial over Z, lowest degree first; empty vector is zero.
struct ZPoly {
    std::vector<long long> c;

    ZPoly() = default;
    ZPoly(std::initializer_list<long long> v) : c(v) { trim(); }
    explicit ZPoly(std::vector<long long> v) : c(std::move(v)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    long long coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : 0;
    }
    long long lead() const { return c.empty() ? 0 : c.back(); }
    bool operator==(const ZPoly& o) const { return c == o.c; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }
};

inline ZPoly zp_const(long long v) { return ZPoly({v}); }

inline ZPoly zp_add(const ZPoly& f, const ZPoly& g) {
    ZPoly r;
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = checked_add_ll(f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

inline ZPoly zp_neg(const ZPoly& f) {
    ZPoly r = f;
    for (auto& x : r.c) x = -x;
    return r;
}

inline ZPoly zp_sub(const ZPoly& f, const ZPoly& g) { return zp_add(f, zp_neg(g)); }

inline ZPoly zp_mul(const ZPoly& f, const ZPoly& g) {
    if (f.is_zero() || g.is_zero()) return ZPoly();
    ZPoly r;
    r.c.assign(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i)
        for (size_t j = 0; j < g.c.size(); ++j)
            r.c[i + j] = checked_add_ll(r.c[i + j], checked_mul_ll(f.c[i], g.c[j]));
    r.trim();
    return r;
}

inline ZPoly zp_scale(const ZPoly& f, long long s) {
    ZPoly r = f;
    for (auto& x : r.c) x = checked_mul_ll(x, s);
    r.trim();
    return r;
}

/// Exact division in Z[t]; throws if g does not divide f.
inline ZPoly zp_divexact(const ZPoly& f, const ZPoly& g) {
    if (g.is_zero()) throw error("exact division by zero polynomial");
    if (f.is_zero()) return ZPoly();
    if (f.degree() < g.degree()) throw error("inexact polynomial division");
    ZPoly r = f, q;
    q.c.assign(static_cast<size_t>(f.degree() - g.degree()) + 1, 0);
    while (!r.is_zero() && r.degree() >= g.degree()) {
        if (r.lead() % g.lead() != 0) throw error("inexact polynomial division");
        long long factor = r.lead() / g.lead();
        int shift = r.degree() - g.degree();
        q.c[static_cast<size_t>(shift)] = factor;
        for (int i = 0; i <= g.degree(); ++i) {
            size_t k = static_cast<size_t>(i + shift);
            r.c[k] = checked_add_ll(r.c[k], -checked_mul_ll(factor, g.coeff(i)));
        }
        r.trim();
    }
    if (!r.is_zero()) throw error("inexact polynomial division");
    q.trim();
    return q;
}

inline long long zp_content(const ZPoly& f) {
    long long g = 0;
    for (long long x : f.c) g = std::gcd(g, std::llabs(x));
    return g;
}

inline ZPoly zp_primitive(const ZPoly& f) {
    long long ct = zp_content(f);
    if (ct <= 1) return f;
    ZPoly r = f;
    for (auto& x : r.c) x /= ct;
    return r;
}

/// Pseudo-remainder: the remainder of lead(g)^k * f by g for some k small
/// enough, computed as repeated r <- lead(g)*r - lead(r)*t^shift*g.
inline ZPoly zp_pseudo_rem(const ZPoly& f, const ZPoly& g) {
    ZPoly r = f;
    if (f.degree() < g.degree()) return r;
    const long long lg = g.lead();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const long long lr = r.lead();
        const int shift = r.degree() - g.degree();
        ZPoly next = zp_scale(r, lg);
        for (int i = 0; i <= g.degree(); ++i) {
            size_t k = static_cast<size_t>(i + shift);
            next.c[k] = checked_add_ll(next.c[k], -checked_mul_ll(lr, g.coeff(i)));
        }
        next.trim();
        r = std::move(next);
    }
    return r;
}

/// GCD in Z[t] via primitive PRS, result primitive with positive leading coeff
/// scaled by the gcd of contents.
inline ZPoly zp_gcd(ZPoly f, ZPoly g) {
    if (f.is_zero()) return g.lead() < 0 ? zp_neg(g) : g;
    if (g.is_zero()) return f.lead() < 0 ? zp_neg(f) : f;
    long long cont = std::gcd(zp_content(f), zp_content(g));
    f = zp_primitive(f);
    g = zp_primitive(g);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        ZPoly r = zp_pseudo_rem(f, g);
        f = std::move(g);
        g = zp_primitive(r);
    }
    f = zp_primitive(f);
    if (f.lead() < 0) f = zp_neg(f);
    return zp_scale(f, cont);
}

inline long long zp_eval(const ZPoly& f, long long x) {
    long long acc = 0;
    for (size_t i = f.c.size(); i-- > 0;)
        acc = checked_add_ll(checked_mul_ll(acc, x), f.c[i]);
    return acc;
}

inline ZPoly zp_derivative(const ZPoly& f) {
    ZPoly r;
    if (f.degree() < 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i)
        r.c[i - 1] = checked_mul_ll(f.c[i], static_cast<long long>(i));
    r.trim();
    return r;
}

inline ZPoly zp_subst_power(const ZPoly& f, long long z) {
    if (z < 0) throw error("zp_subst_power expects z >= 0");
    if (f.is_zero()) return f;
    if (z == 0) return zp_const(zp_eval(f, 1));
    ZPoly r;
    r.c.assign(static_cast<size_t>(f.degree()) * static_cast<size_t>(z) + 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i * static_cast<size_t>(z)] = f.c[i];
    r.trim();
    return r;
}

/// Integer Laurent polynomial: num * t^lo, num with nonzero constant term.
struct ZLaurent {
    int lo = 0;
    ZPoly num;

    ZLaurent() = default;
    ZLaurent(int lowest, ZPoly f) : lo(lowest), num(std::move(f)) { canonicalize_support(); }
    explicit ZLaurent(long long v) : lo(0), num({v}) { num.trim(); }

    void canonicalize_support() {
        if (num.is_zero()) { lo = 0; return; }
        size_t shift = 0;
        while (shift < num.c.size() && num.c[shift] == 0) ++shift;
        if (shift > 0) {
            num.c.erase(num.c.begin(), num.c.begin() + static_cast<long>(shift));
            lo += static_cast<int>(shift);
        }
    }
    bool is_zero() const { return num.is_zero(); }
    int lowest_exponent() const { return lo; }
    int highest_exponent() const { return lo + num.degree(); }
    bool operator==(const ZLaurent& o) const { return lo == o.lo && num == o.num; }
    bool operator!=(const ZLaurent& o) const { return !(*this == o); }
};

inline int breadth_z(const ZLaurent& f) { return f.is_zero() ? 0 : f.num.degree(); }

inline ZLaurent zl_add(const ZLaurent& f, const ZLaurent& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    int lo = std::min(f.lo, g.lo);
    int hi = std::max(f.highest_exponent(), g.highest_exponent());
    ZPoly sum;
    sum.c.assign(static_cast<size_t>(hi - lo) + 1, 0);
    for (int i = 0; i <= f.num.degree(); ++i)
        sum.c[static_cast<size_t>(f.lo + i - lo)] = f.num.c[static_cast<size_t>(i)];
    for (int i = 0; i <= g.num.degree(); ++i) {
        size_t k = static_cast<size_t>(g.lo + i - lo);
        sum.c[k] = checked_add_ll(sum.c[k], g.num.c[static_cast<size_t>(i)]);
    }
    sum.trim();
    return ZLaurent(lo, std::move(sum));
}

inline ZLaurent zl_neg(const ZLaurent& f) { return ZLaurent(f.lo, zp_neg(f.num)); }
inline ZLaurent zl_sub(const ZLaurent& f, const ZLaurent& g) { return zl_add(f, zl_neg(g)); }
inline ZLaurent zl_mul(const ZLaurent& f, const ZLaurent& g) {
    return ZLaurent(f.lo + g.lo, zp_mul(f.num, g.num));
}
inline ZLaurent zl_shift(const ZLaurent& f, int k) {
    return f.is_zero() ? f : ZLaurent(f.lo + k, f.num);
}

/// Canonical associate over Lambda = Z[t,t^-1]: primitive-by-content is NOT
/// forced; only the unit +-t^k is stripped and the sign fixed so the leading
/// coefficient is positive.
inline ZLaurent zl_canonical_unit(const ZLaurent& f) {
    if (f.is_zero()) return f;
    ZLaurent r(0, f.num);
    if (r.num.lead() < 0) r.num = zp_neg(r.num);
    return r;
}

inline ZLaurent zl_subst_power(const ZLaurent& f, long long z) {
    if (f.is_zero()) return f;
    return ZLaurent(static_cast<int>(f.lo * z), zp_subst_power(f.num, z));
}

/// Reduction pi_p : Lambda -> Lambda_p.
inline LaurentPoly reduce_mod_p(const ZLaurent& f, PrimeModulus p) {
    DensePoly num(p);
    num.c.resize(f.num.c.size());
    for (size_t i = 0; i < f.num.c.size(); ++i) num.c[i] = p.reduce(f.num.c[i]);
    num.trim();
    return LaurentPoly(f.lo, std::move(num));
}

inline long long zl_eval(const ZLaurent& f, long long x) {
    // only valid when x = +-1 or lo >= 0; all callers use x = +-1
    long long v = zp_eval(f.num, x);
    if (f.lo != 0) {
        if (x == 1) return v;
        if (x == -1) return (f.lo % 2 == 0) ? v : -v;
        throw error("zl_eval only supports x = +-1 for genuine Laurent polynomials");
    }
    return v;
}

/// Determinant of a square matrix of ZPoly entries, fraction-free Bareiss.
inline ZPoly zp_matrix_det(std::vector<std::vector<ZPoly>> a) {
    const size_t n = a.size();
    if (n == 0) return zp_const(1);
    for (auto& row : a)
        if (row.size() != n) throw error("determinant of a non-square matrix");
    ZPoly prev = zp_const(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return ZPoly();
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                ZPoly num = zp_sub(zp_mul(a[i][j], a[k][k]), zp_mul(a[i][k], a[k][j]));
                a[i][j] = zp_divexact(num, prev);
            }
            a[i][k] = ZPoly();
        }
        prev = a[k][k];
    }
    ZPoly det = a[n - 1][n - 1];
    return sign < 0 ? zp_neg(det) : det;
}

/// Integer determinant via the same Bareiss scheme (used for resultants).
inline long long int_matrix_det(std::vector<std::vector<long long>> a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                long long num = checked_add_ll(checked_mul_ll(a[i][j], a[k][k]),
                                               -checked_mul_ll(a[i][k], a[k][j]));
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// res(f, g) via the Sylvester matrix.
inline long long zp_resultant(const ZPoly& f, const ZPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<long long>> s(size, std::vector<long long>(size, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = g.coeff(n - j);
    return int_matrix_det(std::move(s));
}

/// Odd prime divisors of |v| by trial division.
inline std::vector<long long> odd_prime_divisors(long long v) {
    std::vector<long long> out;
    v = std::llabs(v);
    while (v % 2 == 0 && v != 0) v /= 2;
    for (long long d = 3; d * d <= v; d += 2) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 2) out.push_back(v);
    return out;
}

} // namespace aqlink
