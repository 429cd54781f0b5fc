#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aqlink/zmod.hpp"

namespace aqlink {

/// Oriented combinatorial link diagram. Arcs are cut at undercrossings only;
/// the over strand at a crossing is a single arc. Crossing signs are part of
/// the input data (fixtures carry known-correct signs); planarity is not
/// checked.
struct Crossing {
    int sign = 1;   // +1 or -1
    int over = 0;   // arc id of the over strand
    int under_in = 0;
    int under_out = 0;
};

struct LinkDiagram {
    std::string name;
    int k = 0; // number of components
    std::vector<std::pair<int, int>> arcs; // (arc id, component index 1..k), sorted by id
    std::vector<Crossing> crossings;

    bool has_arc(int id) const {
        for (auto& [a, c] : arcs)
            if (a == id) return true;
        return false;
    }
    int component_of(int arc_id) const {
        for (auto& [a, c] : arcs)
            if (a == arc_id) return c;
        throw error("unknown arc id " + std::to_string(arc_id));
    }
    bool operator==(const LinkDiagram& o) const {
        if (k != o.k || arcs != o.arcs || crossings.size() != o.crossings.size()) return false;
        for (size_t i = 0; i < crossings.size(); ++i) {
            const Crossing &a = crossings[i], &b = o.crossings[i];
            if (a.sign != b.sign || a.over != b.over || a.under_in != b.under_in ||
                a.under_out != b.under_out)
                return false;
        }
        return true;
    }
};

/// Partition of the component set {1..k} into disjoint nonempty blocks.
struct Partition {
    std::vector<std::vector<int>> blocks;
    size_t size() const { return blocks.size(); }
    int block_of(int component) const {
        for (size_t i = 0; i < blocks.size(); ++i)
            for (int c : blocks[i])
                if (c == component) return static_cast<int>(i);
        throw error("component " + std::to_string(component) + " missing from partition");
    }
};

inline Partition minimal_partition(int k) {
    Partition P;
    P.blocks.emplace_back();
    for (int i = 1; i <= k; ++i) P.blocks.back().push_back(i);
    return P;
}

inline Partition maximal_partition(int k) {
    Partition P;
    for (int i = 1; i <= k; ++i) P.blocks.push_back({i});
    return P;
}

inline void validate_partition(const Partition& P, int k) {
    std::vector<int> seen(static_cast<size_t>(k) + 1, 0);
    for (auto& b : P.blocks) {
        if (b.empty()) throw error("empty partition block");
        for (int c : b) {
            if (c < 1 || c > k) throw error("component index " + std::to_string(c) + " out of range");
            if (seen[static_cast<size_t>(c)]++) throw error("component repeated in partition");
        }
    }
    for (int c = 1; c <= k; ++c)
        if (!seen[static_cast<size_t>(c)]) throw error("partition misses component " + std::to_string(c));
}

/// `1,2|3` -> blocks {1,2},{3}.
inline Partition parse_partition(const std::string& text, int k) {
    Partition P;
    std::stringstream in(text);
    std::string blk;
    while (std::getline(in, blk, '|')) {
        std::vector<int> b;
        std::stringstream bs(blk);
        std::string item;
        while (std::getline(bs, item, ',')) {
            if (item.empty()) continue;
            b.push_back(std::stoi(item));
        }
        if (!b.empty()) P.blocks.push_back(std::move(b));
    }
    validate_partition(P, k);
    return P;
}

/// One non-negative label per partition block, interpreted in Z_{t_X} at use.
struct Cycle {
    std::vector<long long> labels;
};

inline Cycle parse_cycle(const std::string& text, size_t nblocks) {
    Cycle z;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        z.labels.push_back(std::stoll(item));
    }
    if (z.labels.size() != nblocks)
        throw error("cycle has " + std::to_string(z.labels.size()) + " labels for " +
                    std::to_string(nblocks) + " blocks");
    return z;
}

inline Cycle constant_cycle(size_t nblocks, long long v) {
    Cycle z;
    z.labels.assign(nblocks, v);
    return z;
}

/// Structural checks from the diagram invariants; violations are returned,
/// not thrown.
inline std::vector<std::string> validate_diagram(const LinkDiagram& D) {
    std::vector<std::string> out;
    std::set<int> ids;
    std::map<int, int> comp;
    for (auto& [id, c] : D.arcs) {
        if (!ids.insert(id).second) out.push_back("duplicate arc id " + std::to_string(id));
        comp[id] = c;
        if (c < 1 || c > D.k)
            out.push_back("arc " + std::to_string(id) + " has component out of range");
    }
    std::set<int> used_components;
    for (auto& [id, c] : D.arcs) used_components.insert(c);
    for (int c = 1; c <= D.k; ++c)
        if (!used_components.count(c)) out.push_back("component " + std::to_string(c) + " has no arcs");
    std::map<int, int> in_count, out_count;
    for (size_t i = 0; i < D.crossings.size(); ++i) {
        const Crossing& x = D.crossings[i];
        const std::string at = "crossing " + std::to_string(i + 1) + ": ";
        if (x.sign != 1 && x.sign != -1) out.push_back(at + "sign not +-1");
        for (int a : {x.over, x.under_in, x.under_out})
            if (!ids.count(a)) out.push_back(at + "unknown arc " + std::to_string(a));
        if (ids.count(x.under_in) && ids.count(x.under_out) &&
            comp[x.under_in] != comp[x.under_out])
            out.push_back(at + "under_in and under_out lie in different components");
        ++in_count[x.under_in];
        ++out_count[x.under_out];
    }
    for (auto& [id, c] : D.arcs) {
        int i = in_count.count(id) ? in_count[id] : 0;
        int o = out_count.count(id) ? out_count[id] : 0;
        if (i != o || i > 1)
            out.push_back("arc " + std::to_string(id) + " is not closed up (under_in x" +
                          std::to_string(i) + ", under_out x" + std::to_string(o) + ")");
    }
    // a component with no undercrossings must be a single closed arc
    for (int c = 1; c <= D.k; ++c) {
        int arcs_of_c = 0, under_of_c = 0;
        for (auto& [id, cc] : D.arcs)
            if (cc == c) {
                ++arcs_of_c;
                if (in_count.count(id)) under_of_c += in_count[id];
            }
        if (under_of_c == 0 && arcs_of_c != 1)
            out.push_back("component " + std::to_string(c) +
                          " has no undercrossings but " + std::to_string(arcs_of_c) + " arcs");
    }
    return out;
}

inline void require_valid(const LinkDiagram& D) {
    auto v = validate_diagram(D);
    if (!v.empty()) throw error("invalid diagram '" + D.name + "': " + v.front());
}

/// Reverses the orientation of component i: swaps under_in/under_out on the
/// crossings whose under strand lies on i, and flips the sign of every
/// crossing in which component i participates exactly once.
inline LinkDiagram reverse_component(const LinkDiagram& D, int i) {
    if (i < 1 || i > D.k) throw error("component index out of range");
    LinkDiagram R = D;
    for (auto& x : R.crossings) {
        bool over_on_i = D.component_of(x.over) == i;
        bool under_on_i = D.component_of(x.under_in) == i;
        if (under_on_i) std::swap(x.under_in, x.under_out);
        if (over_on_i != under_on_i) x.sign = -x.sign;
    }
    return R;
}

/// Line-oriented diagram file format (# comments):
///   link <name>
///   components <k>
///   arc <id> component <c>
///   crossing sign <+1|-1> over <arc> under_in <arc> under_out <arc>
inline LinkDiagram parse_diagram(const std::string& text) {
    LinkDiagram D;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_link = false;
    auto fail = [&](const std::string& msg) {
        throw error("diagram parse error at line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "link") {
            if (!(ls >> D.name)) fail("missing link name");
            saw_link = true;
        } else if (kw == "components") {
            if (!(ls >> D.k) || D.k < 1) fail("bad component count");
        } else if (kw == "arc") {
            int id = 0, c = 0;
            std::string compkw;
            if (!(ls >> id >> compkw >> c) || compkw != "component") fail("bad arc line");
            if (D.has_arc(id)) fail("duplicate arc id " + std::to_string(id));
            if (c < 1 || c > D.k) fail("component index out of range");
            D.arcs.emplace_back(id, c);
        } else if (kw == "crossing") {
            Crossing x;
            std::string k1, k2, k3, k4;
            if (!(ls >> k1 >> x.sign >> k2 >> x.over >> k3 >> x.under_in >> k4 >> x.under_out) ||
                k1 != "sign" || k2 != "over" || k3 != "under_in" || k4 != "under_out")
                fail("bad crossing line");
            if (x.sign != 1 && x.sign != -1) fail("sign not +-1");
            for (int a : {x.over, x.under_in, x.under_out})
                if (!D.has_arc(a)) fail("unknown arc " + std::to_string(a));
            D.crossings.push_back(x);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (!saw_link) throw error("diagram parse error: missing 'link' header");
    std::sort(D.arcs.begin(), D.arcs.end());
    auto violations = validate_diagram(D);
    if (!violations.empty()) throw error("diagram '" + D.name + "' invalid: " + violations.front());
    return D;
}

inline std::string serialize(const LinkDiagram& D) {
    std::ostringstream out;
    out << "link " << D.name << "\n";
    out << "components " << D.k << "\n";
    for (auto& [id, c] : D.arcs) out << "arc " << id << " component " << c << "\n";
    for (auto& x : D.crossings)
        out << "crossing sign " << (x.sign > 0 ? "+1" : "-1") << " over " << x.over
            << " under_in " << x.under_in << " under_out " << x.under_out << "\n";
    return out.str();
}

} // namespace aqlink
