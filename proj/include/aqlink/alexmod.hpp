#pragma once

#include "aqlink/field.hpp"
#include "aqlink/smith.hpp"

namespace aqlink {

/// Elementary divisors e_i^(p) of the Alexander module A^(p)(L), indexed the
/// paper's way: e_{i+1} | e_i. The SNF produces the opposite chain
/// d_1 | ... | d_alpha, so e_i = d_{alpha+1-i}; this mapping is part of the
/// public contract. Zero entries (links only) sort to the front.
struct ElementaryDivisors {
    PrimeModulus p;
    std::vector<DensePoly> e; // size alpha, canonical form

    int alpha() const { return static_cast<int>(e.size()); }

    /// e_i^(p), 1-based; 1 for i > alpha (Lemma: Delta_i = e_i = 1 past alpha).
    DensePoly at(int i) const {
        if (i < 1) throw error("elementary divisor index is 1-based");
        if (i > alpha()) return poly_const(p, 1);
        return e[static_cast<size_t>(i - 1)];
    }

    /// Delta_i^(p) = prod_{j >= i} e_j^(p) (zero if any factor is zero).
    DensePoly delta(int i) const {
        if (i < 1) throw error("delta index is 1-based");
        DensePoly acc = poly_const(p, 1);
        for (int j = alpha(); j >= i; --j) {
            if (e[static_cast<size_t>(j - 1)].is_zero()) return poly_zero(p);
            acc = poly_mul(acc, e[static_cast<size_t>(j - 1)]);
        }
        return poly_make_monic(acc);
    }
};

inline ElementaryDivisors elementary_divisors_of_snf(const SNFResult& snf, PrimeModulus p) {
    ElementaryDivisors ed{p, {}};
    ed.e.assign(snf.d.rbegin(), snf.d.rend());
    return ed;
}

inline ElementaryDivisors elementary_divisors(const SeifertData& sd, PrimeModulus p) {
    SNFResult snf = smith_normal_form(presentation_n1(sd), p, false);
    return elementary_divisors_of_snf(snf, p);
}

/// Integer Delta_i(L): the GCD (over Lambda, computed as content gcd times
/// primitive-part gcd in Z[t]) of the (alpha-i+1)-minors of the z=1
/// presentation matrix; defined up to +-t^k, returned canonically.
/// Delta_{alpha+1} = 1 by the empty-minor convention.
inline ZLaurent integer_delta_i(const SeifertData& sd, int i) {
    const int alpha = sd.alpha();
    if (i < 1 || i > alpha + 1) throw error("integer_delta_i: index out of range");
    if (i == alpha + 1) return ZLaurent(1);
    const int s = alpha - i + 1; // minor order
    Mat<ZLaurent> N = presentation_n1(sd);
    // clear Laurent denominators rowwise; a unit multiple does not change gcds
    Mat<ZPoly> M(static_cast<size_t>(alpha));
    for (int r = 0; r < alpha; ++r) {
        int lo = 0;
        for (auto& e : N[static_cast<size_t>(r)])
            if (!e.is_zero()) lo = std::min(lo, e.lo);
        for (auto& e : N[static_cast<size_t>(r)]) {
            ZPoly padded;
            if (!e.is_zero()) {
                padded.c.assign(static_cast<size_t>(e.lo - lo), 0);
                padded.c.insert(padded.c.end(), e.num.c.begin(), e.num.c.end());
            }
            M[static_cast<size_t>(r)].push_back(std::move(padded));
        }
    }
    // enumerate all s x s minors
    std::vector<int> rows(static_cast<size_t>(s)), cols(static_cast<size_t>(s));
    for (int j = 0; j < s; ++j) rows[static_cast<size_t>(j)] = cols[static_cast<size_t>(j)] = j;
    auto next_comb = [alpha, s](std::vector<int>& idx) -> bool {
        int j = s - 1;
        while (j >= 0 && idx[static_cast<size_t>(j)] == alpha - s + j) --j;
        if (j < 0) return false;
        ++idx[static_cast<size_t>(j)];
        for (int t = j + 1; t < s; ++t)
            idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
        return true;
    };
    ZPoly g;
    bool more_rows = true;
    while (more_rows) {
        for (int j = 0; j < s; ++j) cols[static_cast<size_t>(j)] = j;
        bool more_cols = true;
        while (more_cols) {
            Mat<ZPoly> sub(static_cast<size_t>(s));
            for (int r = 0; r < s; ++r)
                for (int c = 0; c < s; ++c)
                    sub[static_cast<size_t>(r)].push_back(
                        M[static_cast<size_t>(rows[static_cast<size_t>(r)])]
                         [static_cast<size_t>(cols[static_cast<size_t>(c)])]);
            g = zp_gcd(g, zp_matrix_det(std::move(sub)));
            more_cols = next_comb(cols);
        }
        more_rows = next_comb(rows);
    }
    return zl_canonical_unit(ZLaurent(0, g));
}

/// Integer e_i(L) = Delta_i / Delta_{i+1} over Lambda (exact division of
/// canonical representatives; content handled by integer division).
inline ZLaurent integer_e_i(const SeifertData& sd, int i) {
    ZLaurent di = integer_delta_i(sd, i);
    ZLaurent di1 = integer_delta_i(sd, i + 1);
    if (di.is_zero()) return ZLaurent();
    if (di1.is_zero()) throw error("integer_e_i: Delta_{i+1} = 0 with Delta_i != 0");
    return zl_canonical_unit(ZLaurent(0, zp_divexact(di.num, di1.num)));
}

/// Theorem-style coloring module description over X = F(p,h(t)):
/// colorings of (L, P_m, z) correspond to F + sum of Lambda_p/(e_i(t^z), h).
struct ModuleDecomposition {
    ElementaryDivisors ed;
    std::vector<bool> summand_nontrivial; // per i = 1..alpha: h | e_i(t^z)
    int a_x = 0;                          // number of nontrivial summands
    long long z = 1;
};

inline bool h_divides_substituted(const ExtensionField& F, const DensePoly& e_i, long long z) {
    if (e_i.is_zero()) return true;
    // h | e(t^z) in Lambda_p <=> e(tbar^z) = 0 in F(p,h)
    ExtensionField::Elem tz = F.pow_tbar(z);
    ExtensionField::Elem acc = F.zero();
    for (size_t i = e_i.c.size(); i-- > 0;) {
        acc = F.mul(acc, tz);
        acc = F.add(acc, F.from_int(e_i.c[i]));
    }
    return F.is_zero(acc);
}

inline ModuleDecomposition coloring_module_decomposition(const SeifertData& sd,
                                                         const ExtensionField& F, long long z) {
    if (F.p.p < 3) throw error("bad field");
    ModuleDecomposition out;
    out.z = z;
    out.ed = elementary_divisors(sd, F.p);
    out.summand_nontrivial.resize(static_cast<size_t>(out.ed.alpha()));
    for (int i = 1; i <= out.ed.alpha(); ++i) {
        bool nontrivial = h_divides_substituted(F, out.ed.at(i), z);
        out.summand_nontrivial[static_cast<size_t>(i - 1)] = nontrivial;
        if (nontrivial) ++out.a_x;
    }
    return out;
}

/// Direct route: a_X = dim ker N(z, p, h(t)) over the field F.
inline int dim_ker_n(const SeifertData& sd, const ExtensionField& F, long long z) {
    NMatrix N = n_matrix(sd, z);
    const size_t n = N.entries.size();
    std::vector<std::vector<ExtensionField::Elem>> m(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i].push_back(F.from_laurent(N.entries[i][j]));
    // Gaussian elimination over F
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && F.is_zero(m[piv][col])) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        ExtensionField::Elem inv = F.inv(m[rank][col]);
        for (size_t j = col; j < n; ++j) m[rank][j] = F.mul(m[rank][j], inv);
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || F.is_zero(m[i][col])) continue;
            ExtensionField::Elem f = m[i][col];
            for (size_t j = col; j < n; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return static_cast<int>(n - rank);
}

} // namespace aqlink
