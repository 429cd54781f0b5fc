#include <catch2/catch_amalgamated.hpp>

#include "aqlink/aqlink.hpp"

using namespace aqlink;

namespace {
DensePoly P(uint32_t p, const std::string& s) { return parse_poly_mod(s, PrimeModulus(p)); }
LaurentPoly L(uint32_t p, const std::string& s) { return parse_laurent_mod(s, PrimeModulus(p)); }
} // namespace

TEST_CASE("prime modulus validation") {
    CHECK_NOTHROW(PrimeModulus(3));
    CHECK_NOTHROW(PrimeModulus(199));
    CHECK_THROWS_AS(PrimeModulus(2), error);
    CHECK_THROWS_AS(PrimeModulus(9), error);
    CHECK_THROWS_AS(PrimeModulus(1), error);
    PrimeModulus p(7);
    CHECK(p.mul(p.inv(3), 3) == 1);
}

TEST_CASE("polynomial text round trip") {
    ZLaurent f = parse_poly_text("3*t^-1 + 1 + 2*t^2");
    CHECK(f.lo == -1);
    CHECK(breadth_z(f) == 3);
    CHECK(to_text(f) == "3*t^-1 + 1 + 2*t^2");
    CHECK(parse_poly_text(to_text(f)) == f);
    CHECK(to_text(parse_poly_text("-t + 5")) == "5 - t");
    CHECK(to_text(parse_poly_text("0")) == "0");
    CHECK_THROWS_AS(parse_poly_text("t +"), error);
    CHECK_THROWS_AS(parse_poly_text(""), error);
}

TEST_CASE("breadth") {
    CHECK(breadth(L(3, "t - 1 + t^-1")) == 2);
    CHECK(breadth(LaurentPoly(PrimeModulus(3))) == 0);
    CHECK(breadth(L(3, "7")) == 0);
}

TEST_CASE("laurent_normalize canonical associate") {
    // 0 -> 0
    CHECK(laurent_normalize(LaurentPoly(PrimeModulus(3))).is_zero());
    // p=3: -2t + 5 - 2t^-1 -> t^2 + 2t + 1
    CHECK(laurent_normalize(L(3, "-2*t + 5 - 2*t^-1")) == P(3, "1 + 2*t + t^2"));
    // p=5: 2t^3 -> 1
    CHECK(laurent_normalize(L(5, "2*t^3")) == P(5, "1"));
    // associate property: f equals unit * normalize(f)
    LaurentPoly f = L(7, "3*t^-2 + 4 + 2*t");
    DensePoly n = laurent_normalize(f);
    CHECK(poly_divides(n, f.num));
    CHECK(poly_div(f.num, n).degree() == 0);
}

TEST_CASE("poly_gcd spec examples") {
    CHECK(poly_gcd(P(3, "1 + 2*t + t^2"), poly_mul(P(3, "1 + 2*t + t^2"), P(3, "1 + t"))) ==
          P(3, "1 + 2*t + t^2"));
    CHECK(poly_gcd(P(5, "1 + t"), P(5, "2 + t")) == P(5, "1"));
    CHECK(poly_gcd(P(11, "1 + t + t^2 + t^3"), P(11, "1 + t^2")) == P(11, "1 + t^2"));
    CHECK(poly_gcd(poly_zero(PrimeModulus(5)), poly_zero(PrimeModulus(5))).is_zero());
    CHECK_THROWS_AS(poly_gcd(P(3, "t"), P(5, "t")), error);
}

TEST_CASE("poly divmod and xgcd") {
    DensePoly f = P(13, "3 + 5*t + t^2 + 7*t^3");
    DensePoly g = P(13, "2 + t");
    auto [q, r] = poly_divmod(f, g);
    CHECK(poly_add(poly_mul(q, g), r) == f);
    CHECK(r.degree() < g.degree());
    auto [d, u, v] = poly_xgcd(f, g);
    CHECK(poly_add(poly_mul(u, f), poly_mul(v, g)) == d);
}

TEST_CASE("factorization spec examples") {
    // p=3: normalized k1*k2 = (t+1)^4
    LaurentPoly k1 = L(3, "t - 1 + t^-1");
    LaurentPoly k2 = L(3, "-2*t + 5 - 2*t^-1");
    FactorList fl = laurent_factor(laurent_mul(k1, k2));
    REQUIRE(fl.factors.size() == 1);
    CHECK(fl.factors[0].first == P(3, "1 + t"));
    CHECK(fl.factors[0].second == 4);

    // p=11: t^2+1 irreducible
    CHECK(is_irreducible(P(11, "1 + t^2")));
    FactorList f2 = poly_factor(P(11, "1 + t^2"));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].second == 1);

    // p=7: t^2 - t + 1 = (t-3)(t-5); deterministic order sorts t+2 first
    FactorList f3 = poly_factor(P(7, "1 - t + t^2"));
    REQUIRE(f3.factors.size() == 2);
    CHECK(f3.factors[0].first == P(7, "2 + t")); // t - 5
    CHECK(f3.factors[1].first == P(7, "4 + t")); // t - 3
    CHECK_THROWS_AS(poly_factor(poly_zero(PrimeModulus(7))), error);
}

TEST_CASE("factorization reassembles and certifies, random inputs") {
    std::mt19937_64 rng(42);
    const uint32_t ps[] = {3, 5, 7, 11, 13};
    for (int iter = 0; iter < 200; ++iter) {
        PrimeModulus p(ps[rng() % 5]);
        DensePoly f(p);
        int deg = 1 + static_cast<int>(rng() % 6);
        f.c.resize(static_cast<size_t>(deg) + 1);
        for (auto& c : f.c) c = static_cast<uint32_t>(rng() % p.p);
        f.c.back() = 1 + static_cast<uint32_t>(rng() % (p.p - 1));
        f.trim();
        if (f.degree() < 1) continue;
        FactorList fl = poly_factor(f);
        DensePoly prod = poly_const(p, fl.unit);
        for (auto& [fac, mult] : fl.factors) {
            CHECK(is_irreducible(fac)); // independent certificate
            CHECK(fac.is_monic());
            for (int m = 0; m < mult; ++m) prod = poly_mul(prod, fac);
        }
        CHECK(prod == f);
    }
}

TEST_CASE("gcd divides both and is divided by common divisors, random") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        PrimeModulus p(iter % 2 ? 5 : 11);
        auto rand_poly = [&](int maxdeg) {
            DensePoly f(p);
            f.c.resize(static_cast<size_t>(rng() % (maxdeg + 1)) + 1);
            for (auto& c : f.c) c = static_cast<uint32_t>(rng() % p.p);
            f.trim();
            return f;
        };
        DensePoly a = rand_poly(4), b = rand_poly(4), common = rand_poly(2);
        a = poly_mul(a, common);
        b = poly_mul(b, common);
        if (a.is_zero() && b.is_zero()) continue;
        DensePoly g = poly_gcd(a, b);
        CHECK(poly_divides(g, a));
        CHECK(poly_divides(g, b));
        if (!common.is_zero()) CHECK(poly_divides(common, g));
    }
}

TEST_CASE("lemma: gcd commutes with t -> t^z substitution") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        PrimeModulus p(iter % 2 ? 3 : 7);
        auto rand_poly = [&](int maxdeg) {
            DensePoly f(p);
            f.c.resize(static_cast<size_t>(rng() % (maxdeg + 1)) + 1);
            for (auto& c : f.c) c = static_cast<uint32_t>(rng() % p.p);
            f.trim();
            return f;
        };
        long long z = 1 + static_cast<long long>(rng() % 4);
        std::vector<DensePoly> fs;
        for (int i = 0; i < 3; ++i) fs.push_back(rand_poly(3));
        DensePoly d = poly_zero(p);
        for (auto& f : fs) d = poly_gcd(d, f);
        DensePoly lhs = poly_zero(p);
        for (auto& f : fs) lhs = poly_gcd(lhs, poly_subst_power(f, z));
        CHECK(lhs == poly_make_monic(poly_subst_power(d, z)));
    }
}

TEST_CASE("extension field construction") {
    ExtensionField f3 = build_extension_field(3, "1+t");
    CHECK(f3.q == 3);
    CHECK(f3.n == 1);
    ExtensionField f121 = build_extension_field(11, "1+t^2");
    CHECK(f121.q == 121);
    CHECK_THROWS_AS(build_extension_field(5, "t^2 - 1"), error);
    CHECK_THROWS_AS(build_extension_field(5, "3"), error);
    CHECK_THROWS_AS(build_extension_field(9, "1+t"), error);
}

TEST_CASE("field arithmetic: inverses and the defining relation") {
    for (auto [p, h] : std::vector<std::pair<uint32_t, std::string>>{
             {3, "1+t"}, {11, "1+t^2"}, {7, "3+t"}, {5, "2+t+t^2"}}) {
        ExtensionField F = build_extension_field(p, h);
        // h(tbar) = 0
        CHECK(F.is_zero(F.from_poly(F.h)));
        int checked = 0;
        F.for_each_element([&](const ExtensionField::Elem& a) {
            if (F.is_zero(a)) return;
            CHECK(F.mul(a, F.inv(a)) == F.one());
            ++checked;
        });
        CHECK(checked == static_cast<int>(F.q) - 1);
    }
}

TEST_CASE("integer polynomial helpers") {
    ZPoly f({-1, 3, -1}); // -1 + 3t - t^2 (figure-eight delta)
    CHECK(zp_eval(f, -1) == -5);
    CHECK(zp_gcd(ZPoly({2, 2}), ZPoly({4, 4})).c == std::vector<long long>({2, 2}));
    CHECK(zp_gcd(ZPoly({2, 2}), ZPoly({4, 4, 4})).c == std::vector<long long>({2}));
    ZPoly a({1, 2, 1}), b({1, 1});
    CHECK(zp_divexact(a, b) == b);
    CHECK_THROWS_AS(zp_divexact(ZPoly({1, 1, 1}), b), error);
    // resultant of t^2+1 and t^2-1 is 4
    CHECK(zp_resultant(ZPoly({1, 0, 1}), ZPoly({-1, 0, 1})) == 4);
    auto pr = odd_prime_divisors(90);
    CHECK(pr == std::vector<long long>({3, 5}));
}

TEST_CASE("zp matrix determinant") {
    // det [[t-1, 1], [-t, 2-2t]] = -2(t-1)^2 + t
    Mat<ZPoly> m{{ZPoly({-1, 1}), ZPoly({1})}, {ZPoly({0, -1}), ZPoly({2, -2})}};
    CHECK(zp_matrix_det(m) == ZPoly({-2, 5, -2}));
    CHECK(zp_matrix_det({}) == ZPoly({1}));
}
