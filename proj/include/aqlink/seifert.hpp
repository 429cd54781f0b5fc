#pragma once

#include <sstream>

#include "aqlink/intpoly.hpp"
#include "aqlink/polytext.hpp"

namespace aqlink {

template <class T>
using Mat = std::vector<std::vector<T>>;

inline Mat<ZLaurent> zl_matrix_from_int(const Mat<long long>& m) {
    Mat<ZLaurent> out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (auto v : m[i]) out[i].emplace_back(v);
    return out;
}

/// Square presentation data for the Alexander module of a link.
/// origin == Seifert: S is an integer Seifert matrix of order alpha = 2g+k-1.
/// origin == Presentation: S is any square matrix over Lambda presenting the
/// module (used for fixtures whose knots are only known through their modules).
struct SeifertData {
    enum class Origin { Seifert, Presentation };

    std::string name;
    int k = 1;
    Origin origin = Origin::Seifert;
    Mat<ZLaurent> S;

    int alpha() const { return static_cast<int>(S.size()); }
    int genus() const {
        if (origin != Origin::Seifert) throw error("genus undefined for presentation data");
        return (alpha() - k + 1) / 2;
    }
    long long int_entry(int i, int j) const {
        const ZLaurent& e = S[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (e.is_zero()) return 0;
        if (e.lo != 0 || e.num.degree() != 0) throw error("matrix entry is not an integer");
        return e.num.c[0];
    }
};

inline void validate_seifert(const SeifertData& sd) {
    const size_t n = sd.S.size();
    for (auto& row : sd.S)
        if (row.size() != n) throw error("matrix is not square");
    if (sd.k < 1) throw error("component count must be >= 1");
    if (sd.origin == SeifertData::Origin::Seifert) {
        int a = sd.alpha();
        if ((a - sd.k + 1) % 2 != 0 || a - sd.k + 1 < 0)
            throw error("Seifert order " + std::to_string(a) + " incompatible with k=" +
                        std::to_string(sd.k) + " (alpha = 2g+k-1 needs integral g >= 0)");
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < a; ++j) sd.int_entry(i, j); // throws on non-integers
    }
}

/// The antisymmetric block matrix J of order alpha: J[2h-2][2h-1] = -1,
/// J[2h-1][2h-2] = +1 for h = 1..g, zero elsewhere.
inline Mat<long long> j_matrix(int alpha, int g) {
    if (alpha < 0 || g < 0 || 2 * g > alpha) throw error("j_matrix: need 0 <= 2g <= alpha");
    Mat<long long> J(static_cast<size_t>(alpha), std::vector<long long>(static_cast<size_t>(alpha), 0));
    for (int h = 0; h < g; ++h) {
        J[static_cast<size_t>(2 * h)][static_cast<size_t>(2 * h + 1)] = -1;
        J[static_cast<size_t>(2 * h + 1)][static_cast<size_t>(2 * h)] = 1;
    }
    return J;
}

/// S = M + J for special-diagram data M (order alpha = 2g+k-1).
inline SeifertData seifert_from_M(const Mat<long long>& M, int k, const std::string& name = "") {
    const int alpha = static_cast<int>(M.size());
    if ((alpha - k + 1) % 2 != 0 || alpha - k + 1 < 0)
        throw error("seifert_from_M: order incompatible with component count");
    const int g = (alpha - k + 1) / 2;
    Mat<long long> J = j_matrix(alpha, g);
    SeifertData sd;
    sd.name = name;
    sd.k = k;
    sd.origin = SeifertData::Origin::Seifert;
    sd.S.resize(static_cast<size_t>(alpha));
    for (int i = 0; i < alpha; ++i)
        for (int j = 0; j < alpha; ++j)
            sd.S[static_cast<size_t>(i)].emplace_back(
                M[static_cast<size_t>(i)][static_cast<size_t>(j)] + J[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    validate_seifert(sd);
    return sd;
}

/// Recovers special-diagram data M from genus-1 Seifert data, transposing
/// first when the basis has the opposite intersection convention
/// (S - S^T = -J). Kernel dimensions are transpose-invariant, so this is
/// sound for every downstream computation.
inline Mat<long long> genus1_m_matrix(const SeifertData& sd) {
    if (sd.origin != SeifertData::Origin::Seifert || sd.alpha() != 2 || sd.k != 1)
        throw error("genus-1 M extraction needs a 2x2 Seifert matrix of a knot");
    long long s01 = sd.int_entry(0, 1), s10 = sd.int_entry(1, 0);
    long long d = s01 - s10;
    Mat<long long> S{{sd.int_entry(0, 0), s01}, {s10, sd.int_entry(1, 1)}};
    if (d == 1) { // S - S^T = -J: work with the transpose
        std::swap(S[0][1], S[1][0]);
        d = -1;
    }
    if (d != -1) throw error("not a genus-1 Seifert matrix: S - S^T != +-J");
    // M = S - J
    S[0][1] += 1;
    S[1][0] -= 1;
    return S;
}

/// The presentation matrix at z = 1: tS - S^T for Seifert data, S itself for
/// presentation data.
inline Mat<ZLaurent> presentation_n1(const SeifertData& sd) {
    if (sd.origin == SeifertData::Origin::Presentation) return sd.S;
    const int a = sd.alpha();
    Mat<ZLaurent> N(static_cast<size_t>(a));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) {
            ZLaurent ts(1, ZPoly({sd.int_entry(i, j)}));       // t * S_ij
            ZLaurent st(0, ZPoly({sd.int_entry(j, i)}));       // S^T_ij
            N[static_cast<size_t>(i)].push_back(zl_sub(ts, st));
        }
    return N;
}

/// N(z): the z = 1 presentation with t -> t^z applied entrywise.
/// For Seifert data this is exactly t^z S - S^T.
struct NMatrix {
    Mat<ZLaurent> entries;
    long long z = 1;
};

inline NMatrix n_matrix(const SeifertData& sd, long long z) {
    if (z < 0) throw error("n_matrix expects z >= 0");
    NMatrix N;
    N.z = z;
    N.entries = presentation_n1(sd);
    for (auto& row : N.entries)
        for (auto& e : row) e = zl_subst_power(e, z);
    return N;
}

struct AlexanderResult {
    ZLaurent delta;  // canonical associate: unit +-t^k stripped, positive lead
    int A = 0;       // breadth
};

/// Delta(L)(t) = det(S - t S^T), exact over Z[t]; breadth reported as A(L).
/// Presentation-origin data is rejected, breadth claims do not apply to it.
inline AlexanderResult alexander_polynomial(const SeifertData& sd) {
    if (sd.origin != SeifertData::Origin::Seifert)
        throw error("alexander_polynomial needs Seifert-origin data");
    const int a = sd.alpha();
    Mat<ZPoly> m(static_cast<size_t>(a));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            m[static_cast<size_t>(i)].push_back(
                ZPoly({sd.int_entry(i, j), -sd.int_entry(j, i)})); // S_ij - t*S_ji
    AlexanderResult r;
    r.delta = zl_canonical_unit(ZLaurent(0, zp_matrix_det(std::move(m))));
    r.A = breadth_z(r.delta);
    return r;
}

/// det of the z=1 presentation matrix over Lambda, canonical associate.
/// Agrees with Delta for Seifert data and gives Delta_1 for presentations.
inline ZLaurent presentation_det(const SeifertData& sd) {
    Mat<ZLaurent> N = presentation_n1(sd);
    const size_t n = N.size();
    int shift = 0;
    Mat<ZPoly> m(n);
    for (size_t i = 0; i < n; ++i) {
        int lo = 0;
        for (auto& e : N[i])
            if (!e.is_zero()) lo = std::min(lo, e.lo);
        shift += lo;
        for (auto& e : N[i]) {
            ZPoly padded;
            if (!e.is_zero()) {
                padded.c.assign(static_cast<size_t>(e.lo - lo), 0);
                padded.c.insert(padded.c.end(), e.num.c.begin(), e.num.c.end());
            }
            m[i].push_back(std::move(padded));
        }
    }
    return zl_canonical_unit(ZLaurent(shift, zp_matrix_det(std::move(m))));
}

/// Matrix file format:
///   matrix <name>
///   k <int>
///   origin seifert|presentation
/// followed by one row per line, entries whitespace-separated polynomial
/// strings (plain integers for Seifert matrices). Entries with spaces may be
/// quoted: "1 + t".
inline SeifertData parse_matrix_file(const std::string& text) {
    SeifertData sd;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false, saw_origin = false;
    auto fail = [&](const std::string& msg) {
        throw error("matrix parse error at line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "matrix") {
            if (!(ls >> sd.name)) fail("missing matrix name");
            saw_header = true;
        } else if (kw == "k") {
            if (!(ls >> sd.k) || sd.k < 1) fail("bad component count");
        } else if (kw == "origin") {
            std::string o;
            if (!(ls >> o)) fail("missing origin");
            if (o == "seifert") sd.origin = SeifertData::Origin::Seifert;
            else if (o == "presentation") sd.origin = SeifertData::Origin::Presentation;
            else fail("origin must be seifert or presentation");
            saw_origin = true;
        } else {
            // a row: re-scan the whole line as entries
            std::vector<ZLaurent> row;
            std::istringstream rs(line);
            std::string tok;
            while (rs >> tok) {
                if (tok.front() == '"') {
                    while (tok.back() != '"' || tok.size() == 1) {
                        std::string more;
                        if (!(rs >> more)) fail("unterminated quote");
                        tok += " " + more;
                    }
                    tok = tok.substr(1, tok.size() - 2);
                }
                row.push_back(parse_poly_text(tok));
            }
            if (!row.empty()) sd.S.push_back(std::move(row));
        }
    }
    if (!saw_header) throw error("matrix parse error: missing 'matrix' header");
    if (!saw_origin) throw error("matrix parse error: missing 'origin' line");
    validate_seifert(sd);
    return sd;
}

inline std::string serialize(const SeifertData& sd) {
    std::ostringstream out;
    out << "matrix " << sd.name << "\n";
    out << "k " << sd.k << "\n";
    out << "origin " << (sd.origin == SeifertData::Origin::Seifert ? "seifert" : "presentation")
        << "\n";
    for (auto& row : sd.S) {
        for (size_t j = 0; j < row.size(); ++j) {
            std::string s = to_text(row[j]);
            if (s.find(' ') != std::string::npos) s = "\"" + s + "\"";
            out << (j ? " " : "") << s;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace aqlink
