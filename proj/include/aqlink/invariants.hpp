#pragma once

#include <cmath>
#include <set>

#include "aqlink/alexmod.hpp"
#include "aqlink/quandle.hpp"

namespace aqlink {

/// |I(z,p,h,L)| = #{ i >= 1 : h(t) divides e_i^(p)(L)(t^z) }. Zero divisors
/// (links only) are divisible by everything and always count.
inline int i_count(const SeifertData& sd, PrimeModulus p, const LaurentPoly& h, long long z) {
    ExtensionField F = build_extension_field(p, h); // validates irreducibility + breadth
    ElementaryDivisors ed = elementary_divisors(sd, p);
    int count = 0;
    for (int i = 1; i <= ed.alpha(); ++i)
        if (h_divides_substituted(F, ed.at(i), z)) ++count;
    return count;
}

struct SearchConfig {
    uint32_t pmax = 199;
};

/// Finite search frontier for the prime p: all odd primes <= pmax, odd prime
/// divisors of |Delta(-1)|, and odd primes where the rational factorization
/// of Delta degenerates (divisors of the discriminant of the squarefree part,
/// which carries exactly the prime divisors of the pairwise resultants of
/// distinct irreducible factors and of the factor discriminants).
inline std::vector<uint32_t> candidate_primes(const SeifertData& sd, const SearchConfig& cfg = {}) {
    std::set<long long> primes;
    for (uint32_t p = 3; p <= cfg.pmax; p += 2)
        if (is_prime_u64(p)) primes.insert(p);
    ZLaurent delta = presentation_det(sd);
    if (!delta.is_zero()) {
        for (long long p : odd_prime_divisors(zl_eval(delta, -1))) primes.insert(p);
        ZPoly f = delta.num;
        ZPoly sqfree = zp_divexact(f, zp_gcd(f, zp_derivative(f)));
        if (sqfree.degree() >= 1) {
            try {
                long long disc = zp_resultant(sqfree, zp_derivative(sqfree));
                for (long long p : odd_prime_divisors(disc)) primes.insert(p);
            } catch (const error&) {
                // resultant overflow: the pmax frontier and |Delta(-1)| remain
            }
        }
    }
    std::vector<uint32_t> out;
    for (long long p : primes)
        if (p <= 0xffffffffLL) out.push_back(static_cast<uint32_t>(p));
    return out;
}

struct Witness {
    uint32_t p = 0;
    DensePoly h;      // canonical irreducible
    long long z = 1;
    int a_x = 0;
};

enum class ExactnessTag { None, MatchesAUpper, Genus1ClosedForm, MatrixSize };

inline const char* to_string(ExactnessTag t) {
    switch (t) {
        case ExactnessTag::MatchesAUpper: return "matches_A_upper";
        case ExactnessTag::Genus1ClosedForm: return "genus1_closed_form";
        case ExactnessTag::MatrixSize: return "matrix_size";
        default: return "none";
    }
}

struct InvariantReport {
    std::string input_name;
    int aq_lower_bound = 0;
    std::vector<Witness> witnesses;   // maximal witnesses, ascending (p, h)
    bool exact = false;
    ExactnessTag certificate = ExactnessTag::None;
    int delta_hat = 0;                // min breadth(h) among maximal witnesses (0 = undefined)
    uint32_t theta_hat = 0;           // min t_X among those of breadth delta_hat
    bool has_A_upper = false;
    int A_upper = 0;
    int genus_lower = 0;
    int tunnel_lower = 0;
    int alpha = 0;
    int k = 1;
    SearchConfig config;
};

/// Genus-1 closed-form data: W = det M determines Delta and the exact value
/// of A_Q among {0,1,2}.
struct Genus1Report {
    long long W = 0;
    long long det_K = 1; // |4W - 1|
    int aq_exact = 0;
    std::vector<long long> realizing_primes; // odd prime divisors of |4W-1|
};

inline Genus1Report genus1_report(const Mat<long long>& M) {
    if (M.size() != 2 || M[0].size() != 2 || M[1].size() != 2)
        throw error("genus1_report needs a 2x2 matrix");
    Genus1Report r;
    r.W = checked_add_ll(checked_mul_ll(M[0][0], M[1][1]), -checked_mul_ll(M[0][1], M[1][0]));
    r.det_K = std::llabs(checked_add_ll(checked_mul_ll(4, r.W), -1));
    r.realizing_primes = odd_prime_divisors(r.det_K);
    if (r.W == 0) {
        r.aq_exact = 0;
        return r;
    }
    r.aq_exact = 1;
    // a_X = 2 exactly when M11 = M22 = 0, M12 = (p+1)/2, M21 = (p-1)/2 mod p
    // for some odd prime p; all such p divide 2*M21 + 1.
    for (long long p : odd_prime_divisors(checked_add_ll(checked_mul_ll(2, M[1][0]), 1))) {
        auto zero_mod = [p](long long v) { return ((v % p) + p) % p == 0; };
        if (zero_mod(M[0][0]) && zero_mod(M[1][1]) && zero_mod(2 * M[0][1] - 1) &&
            zero_mod(2 * M[1][0] + 1)) {
            r.aq_exact = 2;
            break;
        }
    }
    return r;
}

/// Section 8.6 check: det S = 0, equivalently W = 0 for genuine
/// special-diagram data (det S = det M by the AB identity).
inline bool minimal_seifert_rank_check(const SeifertData& sd) {
    if (sd.origin != SeifertData::Origin::Seifert || sd.alpha() != 2 || sd.k != 1)
        throw error("minimal Seifert rank check needs genus-1 Seifert data");
    long long det = checked_add_ll(checked_mul_ll(sd.int_entry(0, 0), sd.int_entry(1, 1)),
                                   -checked_mul_ll(sd.int_entry(0, 1), sd.int_entry(1, 0)));
    return det == 0;
}

/// The A_Q(L) = A_Q(L,P_m) search, restricted to z = 1 (which loses nothing).
/// Witnesses are every (p,h) attaining the bound within the frontier.
inline InvariantReport aq_search(const SeifertData& sd, const SearchConfig& cfg = {}) {
    InvariantReport rep;
    rep.input_name = sd.name;
    rep.config = cfg;
    rep.alpha = sd.alpha();
    rep.k = sd.k;

    const bool knot = sd.k == 1;
    if (knot && sd.origin == SeifertData::Origin::Seifert) {
        rep.has_A_upper = true;
        rep.A_upper = alexander_polynomial(sd).A;
    }

    for (uint32_t pv : candidate_primes(sd, cfg)) {
        PrimeModulus p(pv);
        ElementaryDivisors ed = elementary_divisors(sd, p);
        int zero_count = 0;
        std::set<std::vector<uint32_t>> hset;
        for (int i = 1; i <= ed.alpha(); ++i) {
            const DensePoly ei = ed.at(i);
            if (ei.is_zero()) {
                ++zero_count;
                continue;
            }
            if (ei.degree() < 1) continue;
            for (auto& [fac, mult] : poly_factor(ei).factors)
                if (fac.degree() >= 1) hset.insert(fac.c);
        }
        if (zero_count > 0) hset.insert(poly_add(poly_const(p, 1), poly_t(p)).c); // 1 + t
        for (const auto& hc : hset) {
            DensePoly h(p, hc);
            ExtensionField F = build_extension_field(p, laurent_from_poly(h));
            int count = zero_count;
            for (int i = 1; i <= ed.alpha(); ++i) {
                const DensePoly ei = ed.at(i);
                if (!ei.is_zero() && h_divides_substituted(F, ei, 1)) ++count;
            }
            if (count <= 0) continue;
            if (count > rep.aq_lower_bound) {
                rep.aq_lower_bound = count;
                rep.witnesses.clear();
            }
            if (count == rep.aq_lower_bound) rep.witnesses.push_back({pv, h, 1, count});
        }
    }

    // exactness certificates
    if (knot && rep.has_A_upper && rep.aq_lower_bound == rep.A_upper) {
        rep.exact = true;
        rep.certificate = ExactnessTag::MatchesAUpper;
    } else if (knot && sd.origin == SeifertData::Origin::Seifert && sd.alpha() == 2) {
        Genus1Report g1 = genus1_report(genus1_m_matrix(sd));
        if (g1.aq_exact == rep.aq_lower_bound) {
            rep.exact = true;
            rep.certificate = ExactnessTag::Genus1ClosedForm;
        }
    }
    if (!rep.exact && rep.aq_lower_bound == rep.alpha && rep.alpha > 0) {
        rep.exact = true;
        rep.certificate = ExactnessTag::MatrixSize;
    }

    // delta-hat / theta-hat over the maximal witness set
    if (!rep.witnesses.empty()) {
        int dmin = rep.witnesses.front().h.degree();
        for (auto& w : rep.witnesses) dmin = std::min(dmin, w.h.degree());
        rep.delta_hat = dmin;
        uint32_t tmin = 0;
        for (auto& w : rep.witnesses) {
            if (w.h.degree() != dmin) continue;
            ExtensionField F = build_extension_field(PrimeModulus(w.p), laurent_from_poly(w.h));
            uint32_t t = quandle_type_of_field(F);
            if (tmin == 0 || t < tmin) tmin = t;
        }
        rep.theta_hat = tmin;
    }

    // bounds from the minimal-partition value
    int num = rep.aq_lower_bound - 2 * sd.k + 2; // |P_m| = 1
    rep.genus_lower = num > 0 ? (num + 1) / 2 : 0;
    rep.tunnel_lower = std::max(rep.aq_lower_bound, 0);
    return rep;
}

enum class PartitionKind { Minimal, Maximal, General };

/// Genus lower bound from A_Q(L,P) <= 2g(L,P) + 2k - |P| - 1.
inline int genus_bounds(int aq, int k, int partition_size, PartitionKind kind) {
    if (aq < 0) throw error("genus_bounds expects aq >= 0");
    if (k < 1) throw error("genus_bounds expects k >= 1");
    int psize = partition_size;
    if (kind == PartitionKind::Minimal) psize = 1;
    else if (kind == PartitionKind::Maximal) psize = k;
    if (psize < 1 || psize > k)
        throw error("partition size " + std::to_string(partition_size) + " inconsistent with k");
    int num = aq - 2 * k + psize + 1;
    return num > 0 ? (num + 1) / 2 : 0;
}

/// Theorem-style per-system bound: for cycles differing exactly on the block
/// set I, sum_{i in I} g(Sigma_i) >= ceil((|a(z)-a(z')| - sum k_i + |I|)/2).
/// Returns the best bound over all admissible pairs in the value map.
inline int partitioned_genus_bounds(const std::vector<std::pair<Cycle, int>>& a_values,
                                    const std::vector<int>& block_components,
                                    const std::vector<int>& changed_blocks) {
    std::set<int> I(changed_blocks.begin(), changed_blocks.end());
    long long ksum = 0;
    for (int b : changed_blocks) {
        if (b < 0 || b >= static_cast<int>(block_components.size()))
            throw error("changed block index out of range");
        ksum += block_components[static_cast<size_t>(b)];
    }
    int best = 0;
    for (size_t i = 0; i < a_values.size(); ++i)
        for (size_t j = i + 1; j < a_values.size(); ++j) {
            const Cycle& z1 = a_values[i].first;
            const Cycle& z2 = a_values[j].first;
            if (z1.labels.size() != z2.labels.size() ||
                z1.labels.size() != block_components.size())
                throw error("cycle length mismatch");
            for (size_t b = 0; b < z1.labels.size(); ++b)
                if (z1.labels[b] != z2.labels[b] && !I.count(static_cast<int>(b)))
                    throw error("cycles differ outside the changed block set");
            long long diff = std::llabs(static_cast<long long>(a_values[i].second) -
                                        a_values[j].second);
            long long num = diff - ksum + static_cast<long long>(I.size());
            if (num > 0) best = std::max(best, static_cast<int>((num + 1) / 2));
        }
    return best;
}

/// t(L) >= A_Q(L, P_M).
inline int tunnel_bound(int aq_max_partition) { return std::max(aq_max_partition, 0); }

/// a_X(K_1 + ... + K_h, z) = sum of the summands' a_X at the same (X, z).
inline std::vector<int> compose_connected_sum(const std::vector<std::vector<int>>& spectra) {
    if (spectra.empty()) return {};
    size_t grid = spectra.front().size();
    for (auto& s : spectra)
        if (s.size() != grid) throw error("connected-sum spectra on mismatched grids");
    std::vector<int> out(grid, 0);
    for (auto& s : spectra)
        for (size_t i = 0; i < grid; ++i) out[i] += s[i];
    return out;
}

/// Split link, maximal partition: a_X(L,P_M,zbar) = sum a_X(K_i, z_i) + h-1.
inline int compose_split_link_value(const std::vector<std::vector<int>>& per_component_a,
                                    const std::vector<size_t>& z_indices) {
    if (per_component_a.size() != z_indices.size()) throw error("split composition arity mismatch");
    int total = static_cast<int>(per_component_a.size()) - 1;
    for (size_t i = 0; i < z_indices.size(); ++i) {
        const auto& a = per_component_a[i];
        if (z_indices[i] >= a.size()) throw error("split composition z index out of range");
        total += a[z_indices[i]];
    }
    return total;
}

/// Best split-link value over the whole z grid (maxima are independent).
inline int compose_split_link_max(const std::vector<std::vector<int>>& per_component_a) {
    int total = static_cast<int>(per_component_a.size()) - 1;
    for (auto& a : per_component_a) {
        if (a.empty()) throw error("empty component spectrum");
        total += *std::max_element(a.begin(), a.end());
    }
    return total;
}

} // namespace aqlink
