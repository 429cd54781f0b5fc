#pragma once

#include "aqlink/laurent.hpp"
#include "aqlink/seifert.hpp"

namespace aqlink {

/// Smith normal form over Lambda_p = Z_p[t, t^-1] (a PID). Input entries are
/// reduced mod p and rows are scaled by t^k units to land in Z_p[t]; the
/// algorithm then runs in Z_p[t] and the diagonal is canonicalized back to
/// Lambda_p form (monic, nonzero constant term; zeros allowed, sorted last).
struct SNFResult {
    std::vector<DensePoly> d;     // invariant factors, d[i] | d[i+1]
    Mat<LaurentPoly> U, V;        // unimodular: U * N * V = diag(d)
    bool with_transforms = true;
};

namespace detail {

struct SnfWork {
    PrimeModulus p;
    Mat<DensePoly> A;
    Mat<LaurentPoly> U, V;
    bool track;

    size_t n() const { return A.size(); }

    void row_swap(size_t i, size_t j) {
        if (i == j) return;
        std::swap(A[i], A[j]);
        if (track) std::swap(U[i], U[j]);
    }
    void col_swap(size_t i, size_t j) {
        if (i == j) return;
        for (auto& row : A) std::swap(row[i], row[j]);
        for (auto& row : V) std::swap(row[i], row[j]);
    }
    // row_i -= q * row_j
    void row_axpy(size_t i, size_t j, const DensePoly& q) {
        if (q.is_zero()) return;
        for (size_t c = 0; c < n(); ++c) A[i][c] = poly_sub(A[i][c], poly_mul(q, A[j][c]));
        if (!track) return;
        LaurentPoly ql = laurent_from_poly(q);
        for (size_t c = 0; c < n(); ++c)
            U[i][c] = laurent_sub(U[i][c], laurent_mul(ql, U[j][c]));
    }
    // col_i -= q * col_j
    void col_axpy(size_t i, size_t j, const DensePoly& q) {
        if (q.is_zero()) return;
        for (size_t r = 0; r < n(); ++r) A[r][i] = poly_sub(A[r][i], poly_mul(q, A[r][j]));
        if (!track) return;
        LaurentPoly ql = laurent_from_poly(q);
        for (size_t r = 0; r < n(); ++r)
            V[r][i] = laurent_sub(V[r][i], laurent_mul(ql, V[r][j]));
    }
    // row_i += row_j
    void row_add(size_t i, size_t j) {
        for (size_t c = 0; c < n(); ++c) A[i][c] = poly_add(A[i][c], A[j][c]);
        if (!track) return;
        for (size_t c = 0; c < n(); ++c) U[i][c] = laurent_add(U[i][c], U[j][c]);
    }
};

/// Pivot: nonzero entry of minimal degree in A[k..][k..], ties broken by
/// smallest row then column.
inline bool find_pivot(const SnfWork& w, size_t k, size_t& pi, size_t& pj) {
    int best = -1;
    for (size_t i = k; i < w.n(); ++i)
        for (size_t j = k; j < w.n(); ++j) {
            const DensePoly& e = w.A[i][j];
            if (e.is_zero()) continue;
            if (best < 0 || e.degree() < best) {
                best = e.degree();
                pi = i;
                pj = j;
            }
        }
    return best >= 0;
}

} // namespace detail

inline SNFResult smith_normal_form(const Mat<ZLaurent>& N, PrimeModulus p,
                                   bool with_transforms = true) {
    const size_t n = N.size();
    for (auto& row : N)
        if (row.size() != n) throw error("smith_normal_form: matrix not square");

    detail::SnfWork w{p, {}, {}, {}, with_transforms};
    w.A.assign(n, std::vector<DensePoly>(n, DensePoly(p)));
    if (with_transforms) {
        LaurentPoly zero(p), one = laurent_from_poly(poly_const(p, 1));
        w.U.assign(n, std::vector<LaurentPoly>(n, zero));
        w.V.assign(n, std::vector<LaurentPoly>(n, zero));
        for (size_t i = 0; i < n; ++i) w.U[i][i] = w.V[i][i] = one;
    }

    // reduce mod p and clear per-row Laurent units into U
    for (size_t i = 0; i < n; ++i) {
        int lo = 0;
        std::vector<LaurentPoly> row;
        for (size_t j = 0; j < n; ++j) {
            row.push_back(reduce_mod_p(N[i][j], p));
            if (!row.back().is_zero()) lo = std::min(lo, row.back().lo);
        }
        for (size_t j = 0; j < n; ++j) {
            const LaurentPoly& e = row[j];
            DensePoly f(p);
            if (!e.is_zero()) {
                f.c.assign(static_cast<size_t>(e.lo - lo), 0);
                f.c.insert(f.c.end(), e.num.c.begin(), e.num.c.end());
            }
            w.A[i][j] = std::move(f);
        }
        if (with_transforms && lo != 0)
            for (size_t j = 0; j < n; ++j) w.U[i][j] = laurent_scale_unit(w.U[i][j], 1, -lo);
    }

    for (size_t k = 0; k < n; ++k) {
        size_t pi = k, pj = k;
        while (true) {
            if (!detail::find_pivot(w, k, pi, pj)) break; // all-zero tail
            w.row_swap(k, pi);
            w.col_swap(k, pj);
            // clear column k below/above within the working block
            bool disturbed = false;
            for (size_t i = k + 1; i < n; ++i) {
                if (w.A[i][k].is_zero()) continue;
                auto [q, r] = poly_divmod(w.A[i][k], w.A[k][k]);
                w.row_axpy(i, k, q);
                if (!r.is_zero()) disturbed = true; // smaller-degree remainder became the new candidate
            }
            for (size_t j = k + 1; j < n; ++j) {
                if (w.A[k][j].is_zero()) continue;
                auto [q, r] = poly_divmod(w.A[k][j], w.A[k][k]);
                w.col_axpy(j, k, q);
                if (!r.is_zero()) disturbed = true;
            }
            if (disturbed) continue;
            bool row_col_clear = true;
            for (size_t i = k + 1; i < n && row_col_clear; ++i)
                if (!w.A[i][k].is_zero()) row_col_clear = false;
            for (size_t j = k + 1; j < n && row_col_clear; ++j)
                if (!w.A[k][j].is_zero()) row_col_clear = false;
            if (!row_col_clear) continue;
            // divisibility fix-up: pivot must divide the remaining submatrix
            bool fixed_up = false;
            for (size_t i = k + 1; i < n && !fixed_up; ++i)
                for (size_t j = k + 1; j < n && !fixed_up; ++j)
                    if (!poly_rem(w.A[i][j], w.A[k][k]).is_zero()) {
                        w.row_add(k, i);
                        fixed_up = true;
                    }
            if (!fixed_up) break;
        }
        if (w.A[k][k].is_zero()) break; // zeros occupy the rest of the diagonal
    }

    // canonicalize the diagonal: strip t^v, make monic; fold units into U
    SNFResult out;
    out.with_transforms = with_transforms;
    out.d.assign(n, DensePoly(p));
    for (size_t k = 0; k < n; ++k) {
        DensePoly dk = w.A[k][k];
        if (dk.is_zero()) continue;
        int v = 0;
        while (dk.c[static_cast<size_t>(v)] == 0) ++v;
        if (v > 0) dk.c.erase(dk.c.begin(), dk.c.begin() + v);
        uint32_t lead = dk.lead();
        if (lead != 1) dk = poly_scale(dk, p.inv(lead));
        out.d[k] = dk;
        if (with_transforms) {
            uint32_t a = p.inv(lead);
            for (size_t j = 0; j < n; ++j) w.U[k][j] = laurent_scale_unit(w.U[k][j], a, -v);
        }
    }
    out.U = std::move(w.U);
    out.V = std::move(w.V);
    return out;
}

inline SNFResult smith_normal_form(const NMatrix& N, PrimeModulus p, bool with_transforms = true) {
    return smith_normal_form(N.entries, p, with_transforms);
}

/// Certificate helpers (used by tests and the selftest suite).
inline LaurentPoly laurent_matrix_det(const Mat<LaurentPoly>& m, PrimeModulus p) {
    const size_t n = m.size();
    if (n == 0) return laurent_from_poly(poly_const(p, 1));
    if (n == 1) return m[0][0];
    LaurentPoly acc(p);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        Mat<LaurentPoly> minor(n - 1);
        for (size_t i = 1; i < n; ++i)
            for (size_t c = 0; c < n; ++c)
                if (c != j) minor[i - 1].push_back(m[i][c]);
        LaurentPoly term = laurent_mul(m[0][j], laurent_matrix_det(minor, p));
        if (j % 2) term = laurent_neg(term);
        acc = laurent_add(acc, term);
    }
    return acc;
}

inline Mat<LaurentPoly> laurent_matrix_mul(const Mat<LaurentPoly>& a, const Mat<LaurentPoly>& b,
                                           PrimeModulus p) {
    const size_t n = a.size();
    Mat<LaurentPoly> r(n, std::vector<LaurentPoly>(n, LaurentPoly(p)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            LaurentPoly acc(p);
            for (size_t k = 0; k < n; ++k) acc = laurent_add(acc, laurent_mul(a[i][k], b[k][j]));
            r[i][j] = acc;
        }
    return r;
}

inline Mat<LaurentPoly> laurent_matrix_reduce(const Mat<ZLaurent>& m, PrimeModulus p) {
    Mat<LaurentPoly> r(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (auto& e : m[i]) r[i].push_back(reduce_mod_p(e, p));
    return r;
}

} // namespace aqlink
