#include "doctest.h"

#include "ajpoly/qdilog.hpp"

#include <cmath>
#include <random>

using namespace ajpoly;

namespace {
constexpr double PI = 3.141592653589793238462643383279502884;
const cplx I{0.0, 1.0};

DilogParams default_params() { return DilogParams(1, std::exp(I * PI / 6.0)); }

struct Rng {
    std::mt19937_64 g;
    explicit Rng(uint64_t s) : g(s) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * ((g() >> 11) * 0x1.0p-53);
    }
};
}  // namespace

TEST_CASE("parameter invariants") {
    auto p = default_params();
    CHECK(std::abs(std::abs(p.b()) - 1.0) < 1e-14);
    // defining identity: q^{1/2} = 1 / <(ib/sqrtN, -1)>
    cplx g = gaussian({I * p.b() / p.sqrtN(), p.reduce_mod_N(-1)}, p);
    CHECK(std::abs(p.q_half() - 1.0 / g) < 1e-12);
    CHECK_THROWS_AS(DilogParams(2, std::exp(I * PI / 6.0)), std::domain_error);
    CHECK_THROWS_AS(DilogParams(1, 1.1), std::domain_error);
    CHECK_THROWS_AS(DilogParams(1, std::exp(I * 2.0)), std::domain_error);
    // real b accepted but flagged
    CHECK(DilogParams(1, 1.0).b_is_real());
    CHECK_FALSE(p.b_is_real());
}

TEST_CASE("gaussian and fourier kernel") {
    auto p = default_params();
    CHECK(std::abs(gaussian({0.0, 0}, p) - 1.0) < 1e-15);
    CHECK(std::abs(gaussian({1.0, 0}, p) + 1.0) < 1e-12);
    DilogParams p3(3, std::exp(I * PI / 6.0));
    // direct formula cross-check at (0.3 + 0.1i, 1), N = 3
    cplx x{0.3, 0.1};
    cplx expect = std::exp(I * PI * x * x) * std::exp(-I * PI * (1.0 * (1 + 3) / 3.0));
    CHECK(std::abs(gaussian({x, 1}, p3) - expect) < 1e-14);

    // kernel: <p, 0> = 1; symmetry
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        ANPointC a{{rng.uniform(-2, 2), rng.uniform(-1, 1)}, 0};
        ANPointC b{{rng.uniform(-2, 2), rng.uniform(-1, 1)}, 0};
        CHECK(std::abs(fourier_kernel(a, {0.0, 0}, p) - 1.0) < 1e-14);
        cplx k1 = fourier_kernel(a, b, p), k2 = fourier_kernel(b, a, p);
        CHECK(std::abs(k1 - k2) < 1e-13 * (1.0 + std::abs(k1)));
    }
}

TEST_CASE("pole/zero locus and triangle") {
    auto p = default_params();
    auto lat = pole_zero_locus(p, 3, 3);
    CHECK(lat.size() == 16);
    // apex p_{0,0} = -c_b/sqrtN
    CHECK(std::abs(lat[0].zero.x - (-p.c_b() / p.sqrtN())) < 1e-15);
    // alpha=1, beta=0 at N=1: -(c_b + ib)
    for (auto& pz : lat) {
        if (pz.alpha == 1 && pz.beta == 0)
            CHECK(std::abs(pz.zero.x - (-(p.c_b() + I * p.b()))) < 1e-15);
        // every zero lies in the closed triangle T
        CHECK(triangle_contains(p, pz.zero.x));
    }
    CHECK_FALSE(triangle_contains(p, cplx(0, 1)));
    CHECK_THROWS_AS(pole_zero_locus(p, -1, 0), std::domain_error);
}

TEST_CASE("difference equations (both shifts), 100 random strip points") {
    auto p = default_params();
    Rng rng(2026);
    const cplx b = p.b(), bb = p.bbar();
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        cplx x{rng.uniform(-2, 2), rng.uniform(-0.49, 0.49) * b.real()};
        cplx D0 = dilog({x, 0}, p);
        // b-shift: D(x + ib, n+1) = (1 - e^{pi i (b^2+1)/N} e^{2 pi b x} e^{2pi i n/N})^{-1} D
        cplx fac = 1.0 - std::exp(I * PI * (b * b + 1.0)) * std::exp(2.0 * PI * b * x);
        cplx lhs = dilog({x + I * b, 0}, p);
        worst = std::max(worst, std::abs(lhs * fac / D0 - 1.0));
        // bbar-shift: D(x + i bbar, n-1) = (1 - e^{pi i (bbar^2+1)/N} e^{2 pi bbar x} e^{-2 pi i n/N})^{-1} D
        cplx fac2 = 1.0 - std::exp(I * PI * (bb * bb + 1.0)) * std::exp(2.0 * PI * bb * x);
        cplx lhs2 = dilog({x + I * bb, 0}, p);
        worst = std::max(worst, std::abs(lhs2 * fac2 / D0 - 1.0));
        // downward variants
        cplx fac3 = 1.0 - std::exp(-I * PI * (b * b + 1.0)) * std::exp(2.0 * PI * b * x);
        cplx lhs3 = dilog({x - I * b, 0}, p);
        worst = std::max(worst, std::abs(lhs3 / (fac3 * D0) - 1.0));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("inversion, unitarity, base point") {
    auto p = default_params();
    Rng rng(7);
    double worst_inv = 0, worst_uni = 0;
    for (int i = 0; i < 100; ++i) {
        cplx x{rng.uniform(-2, 2), rng.uniform(-0.45, 0.45) * p.b().real()};
        ANPointC pt{x, 0};
        cplx lhs = dilog(pt, p) * dilog({-x, 0}, p) * p.zeta_inv() / gaussian(pt, p);
        worst_inv = std::max(worst_inv, std::abs(lhs - 1.0));
        cplx uni = std::conj(dilog({x, 0}, p)) * dilog({std::conj(x), 0}, p);
        worst_uni = std::max(worst_uni, std::abs(uni - 1.0));
    }
    CHECK(worst_inv < 1e-9);
    CHECK(worst_uni < 1e-9);
    // |D(x,n)| = 1 on the real line
    for (double x = -3; x <= 3; x += 0.37)
        CHECK(std::abs(std::abs(dilog({x, 0}, p)) - 1.0) < 1e-10);
    // D(0,0)^2 = zeta_inv^{-1}
    cplx d0 = dilog({0.0, 0}, p);
    CHECK(std::abs(d0 * d0 * p.zeta_inv() - 1.0) < 1e-10);
}

TEST_CASE("asymptotic sectors at |x| = 40") {
    auto p = default_params();
    double argb = std::arg(p.b());
    for (double a : {PI - 0.15, PI / 2 + argb + 0.15, -(PI / 2 + argb + 0.15), -(PI - 0.15)}) {
        cplx x = 40.0 * std::exp(I * a);
        cplx d = std::exp(log_dilog({x, 0}, p));
        CHECK(std::abs(d - 1.0) < 1e-6);
    }
    for (double a : {0.1, PI / 2 - argb - 0.15, -(PI / 2 - argb - 0.15), -0.1}) {
        cplx x = 40.0 * std::exp(I * a);
        cplx combined = log_dilog({x, 0}, p) + std::log(p.zeta_inv()) -
                        log_gaussian({x, 0}, p);
        CHECK(std::abs(std::exp(combined) - 1.0) < 1e-6);
    }
}

TEST_CASE("pole guard") {
    auto p = default_params();
    cplx pole = p.c_b() / p.sqrtN();  // -p_{0,0}
    CHECK_THROWS_AS(dilog({pole + 1e-8, 0}, p), PoleProximityError);
    cplx zero = -p.c_b() / p.sqrtN();
    CHECK_THROWS_AS(dilog({zero + 1e-8, 0}, p), PoleProximityError);
    try {
        dilog({zero + 1e-8, 0}, p);
    } catch (const PoleProximityError& e) {
        CHECK(std::abs(e.nearest.x - zero) < 1e-7);
    }
    // N >= 3 realization is an unimplemented extension
    DilogParams p3(3, std::exp(I * PI / 6.0));
    CHECK_THROWS_AS(dilog({0.0, 0}, p3), std::domain_error);
}

TEST_CASE("phi is D with negated class") {
    auto p = default_params();
    CHECK(std::abs(phi({0.5, 0}, p) - dilog({0.5, 0}, p)) < 1e-12);
}
