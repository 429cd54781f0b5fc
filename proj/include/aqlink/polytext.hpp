#pragma once

#include <cctype>
#include <string>

#include "aqlink/intpoly.hpp"

namespace aqlink {

/// Parser for the polynomial text syntax used across files and flags:
/// integer coefficients, `t^k` monomials (k may be negative), optional `*`,
/// whitespace-insensitive. Examples: `3*t^-1 + 1 + 2*t^2`, `-t+5`, `7`.
inline ZLaurent parse_poly_text(const std::string& text) {
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_int = [&]() -> long long {
        skip_ws();
        bool neg = false;
        if (i < n && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
        skip_ws();
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw error("expected integer at position " + std::to_string(i) + " in '" + text + "'");
        long long v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = checked_add_ll(checked_mul_ll(v, 10), text[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    };

    ZLaurent acc;
    skip_ws();
    if (i == n) throw error("empty polynomial text");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == n) break;
        long long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw error("expected '+' or '-' at position " + std::to_string(i) + " in '" + text + "'");
        }
        first = false;
        long long coeff = 1;
        bool saw_coeff = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = parse_int();
            saw_coeff = true;
            skip_ws();
            if (i < n && text[i] == '*') { ++i; skip_ws(); }
        }
        long long exp = 0;
        if (i < n && text[i] == 't') {
            ++i;
            exp = 1;
            skip_ws();
            if (i < n && text[i] == '^') {
                ++i;
                exp = parse_int();
            }
        } else if (!saw_coeff) {
            throw error("expected term at position " + std::to_string(i) + " in '" + text + "'");
        }
        if (exp < -10000 || exp > 10000) throw error("exponent out of range in '" + text + "'");
        ZPoly mono({checked_mul_ll(sign, coeff)});
        acc = zl_add(acc, ZLaurent(static_cast<int>(exp), std::move(mono)));
    }
    return acc;
}

inline std::string poly_text_term(long long coeff, int exp, bool leading) {
    std::string s;
    long long a = coeff;
    if (leading) {
        if (a < 0) { s += "-"; a = -a; }
    } else {
        s += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
    }
    if (exp == 0) {
        s += std::to_string(a);
    } else {
        if (a != 1) s += std::to_string(a) + "*";
        s += "t";
        if (exp != 1) s += "^" + std::to_string(exp);
    }
    return s;
}

/// Canonical text form, ascending exponents: `1 + 2*t + t^2`, `0` for zero.
inline std::string to_text(const ZLaurent& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool leading = true;
    for (int i = 0; i <= f.num.degree(); ++i) {
        long long v = f.num.coeff(i);
        if (v == 0) continue;
        s += poly_text_term(v, f.lo + i, leading);
        leading = false;
    }
    return s;
}

inline std::string to_text(const ZPoly& f) { return to_text(ZLaurent(0, f)); }

inline std::string to_text(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    ZPoly num;
    num.c.assign(f.num.c.begin(), f.num.c.end());
    return to_text(ZLaurent(f.lo, std::move(num)));
}

inline std::string to_text(const DensePoly& f) {
    return to_text(LaurentPoly(0, f));
}

inline DensePoly parse_poly_mod(const std::string& text, PrimeModulus p) {
    ZLaurent f = parse_poly_text(text);
    LaurentPoly fp = reduce_mod_p(f, p);
    if (fp.is_zero()) return DensePoly(p);
    if (fp.lo < 0) throw error("expected a plain polynomial (no negative exponents): '" + text + "'");
    DensePoly out(p);
    out.c.assign(static_cast<size_t>(fp.lo), 0);
    out.c.insert(out.c.end(), fp.num.c.begin(), fp.num.c.end());
    return out;
}

inline LaurentPoly parse_laurent_mod(const std::string& text, PrimeModulus p) {
    return reduce_mod_p(parse_poly_text(text), p);
}

} // namespace aqlink
