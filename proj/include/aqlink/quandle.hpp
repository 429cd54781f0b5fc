#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "aqlink/field.hpp"

namespace aqlink {

/// Alexander quandle X = (F(p,h(t)), *) with a*b = tbar*a + (1-tbar)*b.
/// The type t_X is computed eagerly at construction, so values are
/// immutable afterwards and safe to share across threads.
struct AlexanderQuandle {
    ExtensionField F;
    ExtensionField::Elem t;       // class of t
    uint32_t type = 0;            // t_X

    bool trivial() const { return type == 1; }
};

using QElem = ExtensionField::Elem;

/// Least m >= 1 with *^m = *^0. Returns 1 iff h = t-1 up to units; otherwise
/// walks m = 2,3,... testing h | p_m(t) via p_m(tbar) = 0, capped at q.
inline uint32_t quandle_type_of_field(const ExtensionField& F) {
    DensePoly t_minus_1(F.p, {F.p.p - 1, 1});
    if (F.h == t_minus_1) return 1;
    QElem tbar = F.tbar();
    QElem s = F.add(F.one(), tbar); // p_2(tbar) = 1 + tbar
    QElem tpow = tbar;
    uint64_t cap = F.q_exact ? F.q : UINT64_MAX;
    for (uint64_t m = 2; m <= cap; ++m) {
        if (F.is_zero(s)) return static_cast<uint32_t>(m);
        tpow = F.mul(tpow, tbar);
        s = F.add(s, tpow);
    }
    throw error("quandle type exceeded its q cap; field too large");
}

inline AlexanderQuandle make_quandle(ExtensionField F) {
    AlexanderQuandle X;
    X.t = F.tbar();
    X.type = quandle_type_of_field(F);
    X.F = std::move(F);
    return X;
}

inline AlexanderQuandle make_quandle(uint32_t p, const std::string& h_text) {
    return make_quandle(build_extension_field(p, h_text));
}

/// Dihedral quandle D_p = (F(p,1+t), *) with a*b = 2b-a.
inline AlexanderQuandle dihedral_quandle(uint32_t p) { return make_quandle(p, "1+t"); }

inline void require_elem(const AlexanderQuandle& X, const QElem& a) {
    if (static_cast<int>(a.size()) != X.F.n) throw error("element does not belong to this quandle's field");
}

/// a *^m b = tbar^m a + (1 - tbar^m) b. Negative m applies S_b^{-1};
/// labels are reduced mod t_X, matching the Z_{t_X}-valued cycle convention.
inline QElem quandle_apply(const AlexanderQuandle& X, const QElem& a, const QElem& b, long long m) {
    require_elem(X, a);
    require_elem(X, b);
    long long mm = m % static_cast<long long>(X.type);
    if (mm < 0) mm += X.type;
    QElem tm = X.F.pow(X.t, static_cast<uint64_t>(mm));
    QElem r = X.F.mul(tm, a);
    QElem hm = X.F.sub(X.F.one(), tm); // H_m(tbar)
    return X.F.add(r, X.F.mul(hm, b));
}

/// Parses the quandle spec string `quandle p=11 h="1+t^2"` (the leading word
/// and the quotes are optional).
inline AlexanderQuandle parse_quandle_spec(const std::string& spec) {
    std::istringstream in(spec);
    std::string tok;
    std::optional<uint32_t> p;
    std::optional<std::string> h;
    while (in >> tok) {
        if (tok == "quandle") continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw error("bad quandle spec token '" + tok + "'");
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        if (!val.empty() && val.front() == '"') {
            while (val.back() != '"' || val.size() == 1) {
                std::string more;
                if (!(in >> more)) throw error("unterminated quote in quandle spec");
                val += " " + more;
            }
            val = val.substr(1, val.size() - 2);
        }
        if (key == "p") p = static_cast<uint32_t>(std::stoul(val));
        else if (key == "h") h = val;
        else throw error("unknown quandle spec key '" + key + "'");
    }
    if (!p || !h) throw error("quandle spec needs p=<prime> and h=<poly>");
    return make_quandle(*p, *h);
}

struct AxiomReport {
    bool ok = true;
    std::string axiom;          // "Q1" | "Q2" | "Q3" when failed
    std::vector<size_t> witness; // indices of the offending elements
};

/// Exhaustive axiom check for an arbitrary binary operation on {0..m-1}.
/// Q2 is cubic in m; intended for small tables.
inline AxiomReport verify_axioms_table(size_t m, const std::function<size_t(size_t, size_t)>& op) {
    AxiomReport rep;
    for (size_t a = 0; a < m; ++a)
        if (op(a, a) != a) return {false, "Q1", {a}};
    std::vector<char> hit(m);
    for (size_t b = 0; b < m; ++b) {
        std::fill(hit.begin(), hit.end(), 0);
        for (size_t a = 0; a < m; ++a) {
            size_t v = op(a, b);
            if (v >= m || hit[v]) return {false, "Q3", {b}};
            hit[v] = 1;
        }
    }
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            for (size_t c = 0; c < m; ++c)
                if (op(op(a, b), c) != op(op(a, c), op(b, c)))
                    return {false, "Q2", {a, b, c}};
    return rep;
}

/// Exhaustive Q1-Q3 verification over the whole quandle; requires q <= 10^4.
inline AxiomReport verify_axioms(const AlexanderQuandle& X) {
    if (!X.F.q_exact || X.F.q > 10000) throw error("field too large for exhaustive axiom check");
    const size_t m = static_cast<size_t>(X.F.q);
    std::vector<QElem> elems;
    elems.reserve(m);
    X.F.for_each_element([&](const QElem& e) { elems.push_back(e); });
    std::map<QElem, size_t> index;
    for (size_t i = 0; i < m; ++i) index[elems[i]] = i;
    auto op = [&](size_t a, size_t b) -> size_t {
        return index.at(quandle_apply(X, elems[a], elems[b], 1));
    };
    return verify_axioms_table(m, op);
}

} // namespace aqlink
