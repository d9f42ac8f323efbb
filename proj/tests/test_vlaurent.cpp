#include "doctest.h"

#include "ajpoly/vlaurent.hpp"
#include "ajpoly/vratio.hpp"

#include <random>

using namespace ajpoly;

namespace {

VLaurent v(long e, long c = 1) { return VLaurent::mono(e, c); }

// deterministic random VLaurent with exponents in [-8, 8], coeffs in [-99, 99]
VLaurent random_poly(std::mt19937_64& rng) {
    VLaurent p;
    int nterms = 1 + (int)(rng() % 5);
    for (int i = 0; i < nterms; ++i) {
        long e = (long)(rng() % 17) - 8;
        long c = (long)(rng() % 199) - 99;
        p += VLaurent::mono(e, c);
    }
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    CHECK((v(2) - v(0)) + (v(0) - v(2)) == VLaurent{});
    CHECK((v(1) - v(0)) * (v(1) + v(0)) == v(2) - v(0));
    // (2v + 4) * 3v^{-1} = 6 + 12 v^{-1}
    CHECK((v(1, 2) + v(0, 4)) * v(-1, 3) == v(0, 6) + v(-1, 12));
    CHECK(v(3).pow(0) == v(0));
    CHECK((v(1) + v(0)).pow(2) == v(2) + v(1, 2) + v(0));
}

TEST_CASE("evaluation at v = 1") {
    CHECK(v(9).eval_one() == 1);
    CHECK((v(2) - v(0)).eval_one() == 0);
    CHECK((v(-2, 3) + v(1, 2) + v(0, 5)).eval_one() == 10);
}

TEST_CASE("eval_one is multiplicative on random pairs") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        VLaurent a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).eval_one() == a.eval_one() * b.eval_one());
    }
}

TEST_CASE("content/unit decomposition") {
    // -6v^3 - 6v^5 = 6 * (-v^3) * (1 + v^2)
    auto cu = (v(3, -6) + v(5, -6)).content_unit();
    CHECK(cu.content == 6);
    CHECK(cu.sign == -1);
    CHECK(cu.vpow == 3);
    CHECK(cu.primitive == v(0) + v(2));

    auto cu2 = v(1).content_unit();
    CHECK(cu2.content == 1);
    CHECK(cu2.sign == 1);
    CHECK(cu2.vpow == 1);
    CHECK(cu2.primitive == v(0));

    auto cu3 = VLaurent(7).content_unit();
    CHECK(cu3.content == 7);
    CHECK(cu3.vpow == 0);
    CHECK(cu3.primitive == v(0));

    CHECK_THROWS_AS(VLaurent{}.content_unit(), std::domain_error);
}

TEST_CASE("content/unit recomposition on random inputs") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 200; ++i) {
        VLaurent a = random_poly(rng);
        if (a.is_zero()) continue;
        auto cu = a.content_unit();
        VLaurent back = VLaurent(cu.content) * VLaurent::mono(cu.vpow, cu.sign) * cu.primitive;
        CHECK(back == a);
    }
}

TEST_CASE("associativity and distributivity on random triples") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 1000; ++i) {
        VLaurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("divexact and gcd") {
    VLaurent a = (v(1) - v(0)) * (v(1) + v(0)) * VLaurent(6);
    CHECK(a.divexact(v(1) - v(0)) == (v(1) + v(0)) * VLaurent(6));
    CHECK_THROWS_AS((v(2) + v(0)).divexact(v(1) - v(0)), std::domain_error);

    VLaurent g = VLaurent::gcd((v(1) - v(0)) * (v(1) + v(0)), (v(1) - v(0)) * (v(1) - v(0)));
    CHECK(g == v(1) - v(0));
    // content gcd included
    CHECK(VLaurent::gcd(VLaurent(6), VLaurent(-4)) == VLaurent(2));
    // gcd of shifted units is a constant
    CHECK(VLaurent::gcd(v(5), v(-3)) == v(0));
}

TEST_CASE("gcd on structured random products") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        VLaurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        VLaurent g = VLaurent::gcd(a * c, b * c);
        // c divides the gcd
        CHECK_NOTHROW(g.divexact(VLaurent::gcd(c, g)));
        CHECK_NOTHROW((a * c).divexact(g));
        CHECK_NOTHROW((b * c).divexact(g));
    }
}

TEST_CASE("VRatio canonical form and field ops") {
    VRatio r(v(2) - v(0), v(1) - v(0));  // (v^2-1)/(v-1) = v+1
    CHECK(r.num() == v(1) + v(0));
    CHECK(r.den() == v(0));

    VRatio s(v(0), v(3, -2));  // 1 / (-2 v^3) -> canonical den 2, num -v^{-3}
    CHECK(s.den() == VLaurent(2));
    CHECK(s.num() == v(-3, -1));

    VRatio x(v(1), v(0, 3)), y(v(0, 1), v(1, 2));
    VRatio z = x * y;  // v/3 * 1/(2v) = 1/6
    CHECK(z.num() == v(0));
    CHECK(z.den() == VLaurent(6));
    CHECK((x - x).is_zero());
    CHECK(x / x == VRatio(v(0)));
    CHECK_THROWS_AS(x / VRatio{}, std::domain_error);
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        VLaurent a = random_poly(rng);
        CHECK(VLaurent::from_json(a.to_json()) == a);
    }
}
