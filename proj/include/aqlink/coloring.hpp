#pragma once

#include "aqlink/diagram.hpp"
#include "aqlink/quandle.hpp"

namespace aqlink {

/// Coloring space of (D, P, z) over X: dimension d >= 1, a_X = d - 1,
/// c_X = q^d. The kernel basis (one coefficient vector per arc) is kept
/// when requested.
struct ColoringResult {
    int d = 0;
    int a = 0;
    uint64_t q = 0;
    bool q_exact = true;
    std::vector<int> arc_ids;
    std::vector<std::vector<QElem>> kernel_basis; // basis vectors aligned with arc_ids

    /// q^d as an exact decimal string.
    std::string count() const { return power_decimal_string(q, d); }
    /// q^d when it fits in a uint64 (throws otherwise; reports use count()).
    uint64_t count_u64() const {
        if (!q_exact) throw error("coloring count exceeds uint64");
        uint64_t acc = 1;
        for (int i = 0; i < d; ++i) {
            if (acc > UINT64_MAX / q) throw error("coloring count exceeds uint64");
            acc *= q;
        }
        return acc;
    }
};

/// Exponent used at a crossing: sign * z(block of the over arc's component),
/// reduced mod t_X here only so cycles stay reusable across quandles.
inline long long crossing_exponent(const LinkDiagram& D, const Partition& P, const Cycle& z,
                                   const AlexanderQuandle& X, const Crossing& c) {
    int block = P.block_of(D.component_of(c.over));
    long long label = z.labels[static_cast<size_t>(block)] % X.type;
    if (label < 0) label += X.type;
    return c.sign > 0 ? label : -label;
}

/// Kernel of the crossing linear system over F(p,h(t)) by exact Gaussian
/// elimination, column-pivoted by first nonzero entry.
inline ColoringResult coloring_dimension(const LinkDiagram& D, const Partition& P, const Cycle& z,
                                         const AlexanderQuandle& X, bool want_kernel = false) {
    require_valid(D);
    validate_partition(P, D.k);
    if (z.labels.size() != P.size()) throw error("cycle/partition size mismatch");

    const ExtensionField& F = X.F;
    const size_t narcs = D.arcs.size();
    std::map<int, size_t> arc_col;
    ColoringResult out;
    for (size_t i = 0; i < narcs; ++i) {
        arc_col[D.arcs[i].first] = i;
        out.arc_ids.push_back(D.arcs[i].first);
    }

    // one relation per crossing: t^(eps z) x_a + (1 - t^(eps z)) x_b - x_c = 0
    std::vector<std::vector<QElem>> rows;
    for (const Crossing& c : D.crossings) {
        long long m = crossing_exponent(D, P, z, X, c);
        QElem tm = F.pow_tbar(m);
        std::vector<QElem> row(narcs, F.zero());
        auto add_at = [&](int arc, const QElem& v) {
            size_t j = arc_col.at(arc);
            row[j] = F.add(row[j], v);
        };
        add_at(c.under_in, tm);
        add_at(c.over, F.sub(F.one(), tm));
        add_at(c.under_out, F.neg(F.one()));
        rows.push_back(std::move(row));
    }

    // elimination
    std::vector<size_t> pivot_col_of_row;
    std::vector<char> col_is_pivot(narcs, 0);
    size_t rank = 0;
    for (size_t col = 0; col < narcs; ++col) {
        size_t piv = rank;
        while (piv < rows.size() && F.is_zero(rows[piv][col])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        QElem inv = F.inv(rows[rank][col]);
        for (size_t j = 0; j < narcs; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || F.is_zero(rows[i][col])) continue;
            QElem f = rows[i][col];
            for (size_t j = 0; j < narcs; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank][j]));
        }
        pivot_col_of_row.push_back(col);
        col_is_pivot[col] = 1;
        ++rank;
        if (rank == rows.size()) break;
    }

    out.d = static_cast<int>(narcs - rank);
    out.a = out.d - 1;
    out.q = F.q;
    out.q_exact = F.q_exact;
    if (want_kernel) {
        for (size_t free_col = 0; free_col < narcs; ++free_col) {
            if (col_is_pivot[free_col]) continue;
            std::vector<QElem> vec(narcs, F.zero());
            vec[free_col] = F.one();
            for (size_t r = 0; r < rank; ++r)
                vec[pivot_col_of_row[r]] = F.neg(rows[r][free_col]);
            out.kernel_basis.push_back(std::move(vec));
        }
    }
    return out;
}

/// Independent oracle: enumerates every arc assignment and checks each
/// crossing with quandle_apply at exponent eps*z. Capped at q^#arcs <= 10^7.
inline uint64_t brute_force_count(const LinkDiagram& D, const Partition& P, const Cycle& z,
                                  const AlexanderQuandle& X) {
    require_valid(D);
    validate_partition(P, D.k);
    const ExtensionField& F = X.F;
    const size_t narcs = D.arcs.size();
    long double total = 1;
    for (size_t i = 0; i < narcs; ++i) total *= static_cast<long double>(F.q);
    if (!F.q_exact || total > 1e7) throw error("brute force instance too large (q^arcs > 10^7)");

    std::vector<QElem> elems;
    F.for_each_element([&](const QElem& e) { elems.push_back(e); });
    std::map<int, size_t> arc_idx;
    for (size_t i = 0; i < narcs; ++i) arc_idx[D.arcs[i].first] = i;

    struct Rel { size_t a, b, c; long long m; };
    std::vector<Rel> rels;
    for (const Crossing& cr : D.crossings)
        rels.push_back({arc_idx.at(cr.under_in), arc_idx.at(cr.over), arc_idx.at(cr.under_out),
                        crossing_exponent(D, P, z, X, cr)});

    std::vector<size_t> odo(narcs, 0);
    uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (const Rel& r : rels) {
            if (quandle_apply(X, elems[odo[r.a]], elems[odo[r.b]], r.m) != elems[odo[r.c]]) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        size_t i = 0;
        while (i < narcs) {
            if (++odo[i] < elems.size()) break;
            odo[i] = 0;
            ++i;
        }
        if (i == narcs) break;
    }
    return count;
}

/// Phi_X(L,P)(t) = sum over cycles zbar of t^(a_X): multiset of exponents.
struct PhiPolynomial {
    std::map<int, uint64_t> multiplicity; // exponent -> count
    uint64_t total = 0;                   // t_X^{|P|}
    int degree() const { return multiplicity.empty() ? 0 : multiplicity.rbegin()->first; }
    std::string to_text() const {
        if (multiplicity.empty()) return "0";
        std::string s;
        for (auto& [e, m] : multiplicity) {
            if (!s.empty()) s += " + ";
            if (m != 1 || e == 0) s += std::to_string(m);
            if (e > 0) {
                if (m != 1) s += "*";
                s += e == 1 ? "t" : "t^" + std::to_string(e);
            }
        }
        return s;
    }
};

inline PhiPolynomial phi_polynomial(const LinkDiagram& D, const Partition& P,
                                    const AlexanderQuandle& X) {
    require_valid(D);
    validate_partition(P, D.k);
    const size_t h = P.size();
    long double total = 1;
    for (size_t i = 0; i < h; ++i) total *= static_cast<long double>(X.type);
    if (total > 1e6) throw error("phi enumeration cap exceeded (t_X^|P| > 10^6)");
    PhiPolynomial phi;
    Cycle z = constant_cycle(h, 0);
    while (true) {
        ColoringResult r = coloring_dimension(D, P, z, X);
        ++phi.multiplicity[r.a];
        ++phi.total;
        size_t i = 0;
        while (i < h) {
            if (++z.labels[i] < static_cast<long long>(X.type)) break;
            z.labels[i] = 0;
            ++i;
        }
        if (i == h) break;
    }
    return phi;
}

/// The multiset of a_X over all maximal-partition cycles; the unoriented
/// invariance statement is about this object.
inline std::map<int, uint64_t> a_multiset_max_partition(const LinkDiagram& D,
                                                        const AlexanderQuandle& X) {
    return phi_polynomial(D, maximal_partition(D.k), X).multiplicity;
}

} // namespace aqlink
