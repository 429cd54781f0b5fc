#pragma once

#include "aqlink/diagram.hpp"
#include "aqlink/seifert.hpp"

namespace aqlink {

namespace detail {

/// Event on an oriented closed walk: participation in a crossing, either as
/// the over strand (is_under = false) or as the under strand passing through.
struct WalkEvent {
    int crossing;
    bool is_under;
};

/// Assembles a LinkDiagram from closed walks. Each crossing must occur
/// exactly once as an over event and once as an under event across all
/// walks; arcs are cut at under events.
inline LinkDiagram diagram_from_walks(const std::string& name,
                                      const std::vector<std::vector<WalkEvent>>& walks,
                                      const std::vector<int>& signs) {
    LinkDiagram D;
    D.name = name;
    D.k = static_cast<int>(walks.size());
    D.crossings.resize(signs.size());
    for (size_t c = 0; c < signs.size(); ++c) D.crossings[c].sign = signs[c];

    int next_arc = 1;
    for (size_t w = 0; w < walks.size(); ++w) {
        const auto& ev = walks[w];
        const int comp = static_cast<int>(w) + 1;
        std::vector<size_t> unders;
        for (size_t i = 0; i < ev.size(); ++i)
            if (ev[i].is_under) unders.push_back(i);
        if (unders.empty()) {
            int arc = next_arc++;
            D.arcs.emplace_back(arc, comp);
            for (const auto& e : ev) D.crossings[static_cast<size_t>(e.crossing)].over = arc;
            continue;
        }
        const size_t m = unders.size(), n = ev.size();
        for (size_t j = 0; j < m; ++j) {
            int arc = next_arc++;
            D.arcs.emplace_back(arc, comp);
            size_t from = unders[j], to = unders[(j + 1) % m];
            D.crossings[static_cast<size_t>(ev[from].crossing)].under_out = arc;
            D.crossings[static_cast<size_t>(ev[to].crossing)].under_in = arc;
            for (size_t i = (from + 1) % n; i != to; i = (i + 1) % n) {
                if (!ev[i].is_under)
                    D.crossings[static_cast<size_t>(ev[i].crossing)].over = arc;
            }
        }
    }
    require_valid(D);
    return D;
}

} // namespace detail

/// Closure of a braid word on n strands. Letters are +-i (1-based); letter +i
/// makes the strand at position i cross over the strand at position i+1 with
/// crossing sign +1, letter -i the mirror with sign -1. All strands are
/// oriented the same way, closure arcs carry no crossings.
inline LinkDiagram braid_closure(const std::string& name, int strands,
                                 const std::vector<int>& word) {
    if (strands < 1) throw error("braid needs at least one strand");
    std::vector<std::vector<detail::WalkEvent>> strand_events(static_cast<size_t>(strands));
    std::vector<int> pos_to_strand(static_cast<size_t>(strands));
    for (int i = 0; i < strands; ++i) pos_to_strand[static_cast<size_t>(i)] = i;
    std::vector<int> signs;
    for (size_t li = 0; li < word.size(); ++li) {
        int letter = word[li];
        int q = std::abs(letter) - 1;
        if (letter == 0 || q + 1 >= strands) throw error("braid letter out of range");
        int west = pos_to_strand[static_cast<size_t>(q)];
        int east = pos_to_strand[static_cast<size_t>(q + 1)];
        int over = letter > 0 ? west : east;
        int under = letter > 0 ? east : west;
        int c = static_cast<int>(signs.size());
        signs.push_back(letter > 0 ? 1 : -1);
        strand_events[static_cast<size_t>(over)].push_back({c, false});
        strand_events[static_cast<size_t>(under)].push_back({c, true});
        std::swap(pos_to_strand[static_cast<size_t>(q)], pos_to_strand[static_cast<size_t>(q + 1)]);
    }
    // closure: strand s ends at bottom position e(s); continue with strand e(s)
    std::vector<int> end_pos(static_cast<size_t>(strands));
    for (int p = 0; p < strands; ++p) end_pos[static_cast<size_t>(pos_to_strand[static_cast<size_t>(p)])] = p;
    std::vector<char> seen(static_cast<size_t>(strands), 0);
    std::vector<std::vector<detail::WalkEvent>> walks;
    for (int s0 = 0; s0 < strands; ++s0) {
        if (seen[static_cast<size_t>(s0)]) continue;
        std::vector<detail::WalkEvent> walk;
        int s = s0;
        do {
            seen[static_cast<size_t>(s)] = 1;
            for (auto& e : strand_events[static_cast<size_t>(s)]) walk.push_back(e);
            s = end_pos[static_cast<size_t>(s)];
        } while (s != s0);
        walks.push_back(std::move(walk));
    }
    return detail::diagram_from_walks(name, walks, signs);
}

namespace detail {

/// Corridor state for the band-surface emitter: four lanes, each holding one
/// boundary strand of the two bands. Strand ids: 0 = Aw (up), 1 = Ae (down),
/// 2 = Bw (up), 3 = Be (down).
struct BandCorridor {
    std::array<int, 4> lane{0, 1, 2, 3};
    std::array<std::vector<WalkEvent>, 4> events; // static bottom-up order per strand
    std::vector<int> signs;

    static bool strand_up(int s) { return s == 0 || s == 2; }

    int new_crossing(int sign) {
        signs.push_back(sign);
        return static_cast<int>(signs.size()) - 1;
    }

    /// Full ribbon twist on the band occupying lanes (base, base+1): two
    /// crossings of sign s with alternating over strand. The mirror flips
    /// both the signs and which strand passes over first.
    void twist(int base, int s) {
        int west = lane[static_cast<size_t>(base)];
        int east = lane[static_cast<size_t>(base + 1)];
        int first_over = s < 0 ? east : west;
        int first_under = s < 0 ? west : east;
        int c1 = new_crossing(s);
        events[static_cast<size_t>(first_over)].push_back({c1, false});
        events[static_cast<size_t>(first_under)].push_back({c1, true});
        int c2 = new_crossing(s);
        events[static_cast<size_t>(first_under)].push_back({c2, false});
        events[static_cast<size_t>(first_over)].push_back({c2, true});
        // lanes swap twice: net identity
    }

    /// Band-over-band block: the pair in lanes (0,1) crosses the pair in
    /// lanes (2,3) and the two pairs swap. mode +1: west pair over east pair;
    /// mode -1: west pair under. Crossing signs follow the orientation rule
    /// sign = mode when the two strands are antiparallel, -mode when parallel.
    void cross_pairs(int mode) {
        int xa = lane[0], xb = lane[1], ya = lane[2], yb = lane[3];
        auto emit = [&](int x, int y) {
            bool parallel = strand_up(x) == strand_up(y);
            int s = parallel ? -mode : mode;
            int c = new_crossing(s);
            int over = mode > 0 ? x : y;
            int under = mode > 0 ? y : x;
            events[static_cast<size_t>(over)].push_back({c, false});
            events[static_cast<size_t>(under)].push_back({c, true});
        };
        emit(xb, ya);
        emit(xa, ya);
        emit(xb, yb);
        emit(xa, yb);
        lane = {ya, yb, xa, xb};
    }
};

} // namespace detail

/// Boundary diagram of a genus-1 surface made of two bands: tw_a full twists
/// on band A, tw_b on band B, `wraps` full wraps of the pair, and the fixed
/// closure block where band A arches over band B. Signs of the counts select
/// the chirality of each region.
inline LinkDiagram band_surface_diagram(const std::string& name, int tw_a, int tw_b, int wraps) {
    detail::BandCorridor cor;
    for (int i = 0; i < std::abs(tw_a); ++i) cor.twist(0, tw_a > 0 ? 1 : -1);
    for (int i = 0; i < std::abs(tw_b); ++i) cor.twist(2, tw_b > 0 ? 1 : -1);
    for (int i = 0; i < std::abs(wraps); ++i) {
        cor.cross_pairs(wraps > 0 ? 1 : -1);
        cor.cross_pairs(wraps > 0 ? 1 : -1);
    }
    cor.cross_pairs(1); // closure: A over B

    // knot boundary walk: Aw up, Be down, Ae down, Bw up
    std::vector<detail::WalkEvent> walk;
    auto append_up = [&](int s) {
        for (auto& e : cor.events[static_cast<size_t>(s)]) walk.push_back(e);
    };
    auto append_down = [&](int s) {
        auto& ev = cor.events[static_cast<size_t>(s)];
        for (size_t i = ev.size(); i-- > 0;) walk.push_back(ev[i]);
    };
    append_up(0);
    append_down(3);
    append_down(1);
    append_up(2);
    return detail::diagram_from_walks(name, {walk}, cor.signs);
}

/// Special-diagram parameters (paper convention M - M^T = -J) realized by
/// band_surface_diagram. The geometric-to-algebraic mapping below is frozen
/// by the route-equivalence grid test: the emitted knot has Seifert matrix
/// S = M + J with M = [[m11, w+1],[w, m22]].
inline LinkDiagram genus1_special_diagram(const std::string& name, long long m11, long long m22,
                                          long long w) {
    auto fits = [](long long v) { return v >= -1000 && v <= 1000; };
    if (!fits(m11) || !fits(m22) || !fits(w)) throw error("genus-1 parameters out of range");
    return band_surface_diagram(name, static_cast<int>(m22), static_cast<int>(m11),
                                static_cast<int>(w));
}

/// Disjoint union: components and arcs renumbered after the first summand.
inline LinkDiagram split_union(const std::string& name, const LinkDiagram& D1,
                               const LinkDiagram& D2) {
    LinkDiagram D = D1;
    D.name = name;
    D.k = D1.k + D2.k;
    int arc_shift = 0;
    for (auto& [id, c] : D1.arcs) arc_shift = std::max(arc_shift, id);
    for (auto& [id, c] : D2.arcs) D.arcs.emplace_back(id + arc_shift, c + D1.k);
    for (const Crossing& x : D2.crossings)
        D.crossings.push_back({x.sign, x.over + arc_shift, x.under_in + arc_shift,
                               x.under_out + arc_shift});
    std::sort(D.arcs.begin(), D.arcs.end());
    require_valid(D);
    return D;
}

/// Connected sum of two knot diagrams, spliced along the lowest-id arc of
/// each: the splice point sits right before that arc's under_in end in D1 and
/// right after its under_out start in D2, so the connector arc carries no
/// over-crossings.
inline LinkDiagram connected_sum(const std::string& name, const LinkDiagram& D1,
                                 const LinkDiagram& D2) {
    if (D1.k != 1 || D2.k != 1) throw error("connected_sum expects knot diagrams");
    if (D1.crossings.empty()) { LinkDiagram D = D2; D.name = name; return D; }
    if (D2.crossings.empty()) { LinkDiagram D = D1; D.name = name; return D; }
    const int a1 = D1.arcs.front().first;
    const int a2 = D2.arcs.front().first;
    int arc_shift = 0;
    for (auto& [id, c] : D1.arcs) arc_shift = std::max(arc_shift, id);

    LinkDiagram D;
    D.name = name;
    D.k = 1;
    for (auto& [id, c] : D1.arcs) D.arcs.emplace_back(id, 1);
    for (auto& [id, c] : D2.arcs)
        if (id != a2) D.arcs.emplace_back(id + arc_shift, 1);
    // arc A keeps id a1: all of a1's references except its under_in end,
    // plus a2's over references and under_in end. The connector arc B gets
    // a fresh id: a2's under_out end and a1's under_in end.
    const int connector = arc_shift + a2; // a2's slot, now the connector
    D.arcs.emplace_back(connector, 1);
    std::sort(D.arcs.begin(), D.arcs.end());
    for (const Crossing& x : D1.crossings) {
        Crossing y = x;
        if (y.under_in == a1) y.under_in = connector;
        D.crossings.push_back(y);
    }
    for (const Crossing& x : D2.crossings) {
        Crossing y{x.sign, x.over + arc_shift, x.under_in + arc_shift, x.under_out + arc_shift};
        if (x.over == a2) y.over = a1;
        if (x.under_in == a2) y.under_in = a1;
        if (x.under_out == a2) y.under_out = connector;
        D.crossings.push_back(y);
    }
    require_valid(D);
    return D;
}

/// Diagram catalog. Combinators nest: split(trefoil_plus,unknot),
/// connected_sum(trefoil_plus,figure_eight), kp_diagram_<p>.
inline LinkDiagram builtin_fixture(const std::string& name) {
    if (name == "unknot") {
        LinkDiagram D;
        D.name = name;
        D.k = 1;
        D.arcs.emplace_back(1, 1);
        return D;
    }
    if (name == "trefoil_plus") return braid_closure(name, 2, {1, 1, 1});
    if (name == "trefoil_minus_mirror") return braid_closure(name, 2, {-1, -1, -1});
    if (name == "figure_eight") return braid_closure(name, 3, {1, -2, 1, -2});
    if (name == "hopf_plus") return braid_closure(name, 2, {1, 1});
    if (name == "trefoil_plus_kink") return braid_closure(name, 3, {1, 1, 1, 2});
    if (name == "figure_eight_r2") return braid_closure(name, 3, {1, -2, 1, -2, 1, -1});
    if (name == "r3_a") return braid_closure(name, 3, {1, 2, 1});
    if (name == "r3_b") return braid_closure(name, 3, {2, 1, 2});
    if (name.rfind("kp_diagram_", 0) == 0) {
        long long p = std::stoll(name.substr(11));
        if (p < 3 || p % 2 == 0 || !is_prime_u64(static_cast<uint64_t>(p)))
            throw error("kp_diagram_<p> needs an odd prime");
        // M11 = 0, M22 = p, M12 = -(p-1)/2, M21 = -(p+1)/2; w = M21
        return genus1_special_diagram(name, 0, p, -(p + 1) / 2);
    }
    auto paren = name.find('(');
    if (paren != std::string::npos && name.back() == ')') {
        std::string op = name.substr(0, paren);
        std::string args = name.substr(paren + 1, name.size() - paren - 2);
        int depth = 0;
        size_t comma = std::string::npos;
        for (size_t i = 0; i < args.size(); ++i) {
            if (args[i] == '(') ++depth;
            else if (args[i] == ')') --depth;
            else if (args[i] == ',' && depth == 0) { comma = i; break; }
        }
        if (comma == std::string::npos) throw error("combinator needs two arguments: " + name);
        LinkDiagram D1 = builtin_fixture(args.substr(0, comma));
        LinkDiagram D2 = builtin_fixture(args.substr(comma + 1));
        if (op == "split") return split_union(name, D1, D2);
        if (op == "connected_sum") return connected_sum(name, D1, D2);
        throw error("unknown combinator '" + op + "'");
    }
    throw error("unknown fixture '" + name + "'");
}

inline std::vector<std::string> diagram_fixture_names() {
    return {"unknot", "trefoil_plus", "trefoil_minus_mirror", "figure_eight", "hopf_plus",
            "trefoil_plus_kink", "figure_eight_r2", "r3_a", "r3_b",
            "kp_diagram_3", "split(unknot,unknot)", "split(trefoil_plus,trefoil_plus)",
            "connected_sum(trefoil_plus,figure_eight)"};
}

/// Matrix fixture catalog: Seifert matrices for the standard knots, the K_p
/// and K'_p families, and the two presentation fixtures built from
/// k1 = t-1+t^-1 and k2 = -2t+5-2t^-1.
inline SeifertData matrix_fixture(const std::string& name) {
    auto from_rows = [&](Mat<long long> rows, int k) {
        SeifertData sd;
        sd.name = name;
        sd.k = k;
        sd.origin = SeifertData::Origin::Seifert;
        sd.S = zl_matrix_from_int(rows);
        validate_seifert(sd);
        return sd;
    };
    if (name == "unknot_seifert") return from_rows({}, 1);
    if (name == "trefoil_seifert") return from_rows({{-1, 1}, {0, -1}}, 1);
    if (name == "figure_eight_seifert") return from_rows({{1, 1}, {0, -1}}, 1);
    if (name.rfind("torus_2_", 0) == 0) {
        long long q = std::stoll(name.substr(8));
        if (q < 3 || q % 2 == 0) throw error("torus_2_<q> needs odd q >= 3");
        int g = static_cast<int>((q - 1) / 2);
        Mat<long long> rows(static_cast<size_t>(2 * g), std::vector<long long>(static_cast<size_t>(2 * g), 0));
        for (int i = 0; i < 2 * g; ++i) {
            rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = -1;
            if (i + 1 < 2 * g) rows[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = 1;
        }
        return from_rows(rows, 1);
    }
    if (name.rfind("kp_matrix_p", 0) == 0 || name.rfind("kpp_matrix_p", 0) == 0) {
        bool prime_family = name.rfind("kp_matrix_p", 0) == 0;
        long long p = std::stoll(name.substr(prime_family ? 11 : 12));
        if (p < 3 || p % 2 == 0 || !is_prime_u64(static_cast<uint64_t>(p)))
            throw error("K_p fixtures need an odd prime");
        Mat<long long> M{{0, -(p - 1) / 2}, {-(p + 1) / 2, prime_family ? p : p + 1}};
        SeifertData sd = seifert_from_M(M, 1, name);
        return sd;
    }
    if (name == "wdouble_trivial") {
        // genus-1 data with W = det M = 0 (trivial Alexander polynomial)
        SeifertData sd = seifert_from_M({{0, 1}, {0, 0}}, 1, name);
        return sd;
    }
    if (name == "inoue_remark" || name == "controes") {
        ZLaurent k1 = parse_poly_text("t - 1 + t^-1");
        ZLaurent k2 = parse_poly_text("-2*t + 5 - 2*t^-1");
        SeifertData sd;
        sd.name = name;
        sd.k = 1;
        sd.origin = SeifertData::Origin::Presentation;
        if (name == "inoue_remark") {
            sd.S.assign(4, std::vector<ZLaurent>(4, ZLaurent()));
            sd.S[0][0] = sd.S[1][1] = k1;
            sd.S[2][2] = sd.S[3][3] = k2;
        } else {
            ZLaurent k1k2 = zl_mul(k1, k2);
            sd.S.assign(2, std::vector<ZLaurent>(2, ZLaurent()));
            sd.S[0][0] = sd.S[1][1] = k1k2;
        }
        validate_seifert(sd);
        return sd;
    }
    throw error("unknown matrix fixture '" + name + "'");
}

inline std::vector<std::string> matrix_fixture_names() {
    return {"unknot_seifert", "trefoil_seifert", "figure_eight_seifert", "torus_2_7",
            "kp_matrix_p3", "kp_matrix_p5", "kp_matrix_p7", "kp_matrix_p11",
            "kpp_matrix_p3", "kpp_matrix_p5", "kpp_matrix_p7", "kpp_matrix_p11",
            "wdouble_trivial", "inoue_remark", "controes"};
}

} // namespace aqlink
