#include "doctest.h"

#include "ajpoly/wgz.hpp"

#include <cmath>
#include <random>

using namespace ajpoly;

namespace {
constexpr double PI = 3.141592653589793238462643383279502884;
const cplx I{0.0, 1.0};
}  // namespace

TEST_CASE("quantization parameter invariants") {
    QuantParams qp(1, 1.0);
    CHECK(std::abs(std::abs(qp.b()) - 1.0) < 1e-12);
    cplx e4 = std::exp(4.0 * qp.r() * (double)qp.N());
    CHECK(std::abs(std::abs(e4) - 1.0) < 1e-12);
    CHECK(std::abs(e4 * qp.t() + std::conj(qp.t())) < 1e-12);

    // the two q formulas agree for random levels
    std::mt19937_64 rng(42);
    for (int i = 0; i < 10; ++i) {
        int N = 1 + (int)(rng() % 5);
        double S = 0.25 + (rng() >> 11) * 0x1.0p-53 * 4.0;
        QuantParams q(N, S);
        CHECK(std::abs(q.q_via_b() - q.q_via_t()) < 1e-12);
    }
}

TEST_CASE("forward transform against a dense independent sum") {
    QuantParams qp(1, 1.0);
    GaussianAN g;
    g.amp = {1.0};
    g.mu = 0.0;
    g.c = 0.0;
    auto f = g.fn();
    TorusSection s = wgz_forward(f, 8, 32, 32, qp);
    // dense oracle with a much larger truncation
    double worst = 0;
    for (int i = 0; i < 32; i += 5)
        for (int j = 0; j < 32; j += 7) {
            double u = i / 32.0, v = j / 32.0;
            cplx acc = 0;
            for (int m = -40; m <= 40; ++m)
                acc += f(u + m, -m) * std::exp(2.0 * PI * I * (double)m * v);
            acc *= std::exp(I * PI * u * v);
            worst = std::max(worst, std::abs(acc - s.at(i, j)));
        }
    CHECK(worst < 1e-10);
    // insufficient truncation is detected
    CHECK_THROWS_AS(wgz_forward(f, 1, 16, 16, qp), std::runtime_error);
}

TEST_CASE("full correspondence report at N=1, S=1") {
    QuantParams qp(1, 1.0);
    WgzReport rep = verify_an_correspondence(qp, 256, 24);
    CHECK(rep.family_size == 5);
    CHECK(rep.grad_u_residual < 1e-8);
    CHECK(rep.grad_v_residual < 1e-8);
    CHECK(rep.mult_u_residual < 1e-8);
    CHECK(rep.mult_v_residual < 1e-8);
    CHECK(rep.mhat_residual < 1e-6);
    CHECK(rep.lhat_residual < 1e-6);
    CHECK(rep.commutator_residual < 1e-6);
    CHECK(rep.isometry_residual < 1e-6);
    CHECK(rep.q_formula_diff < 1e-12);
    CHECK(rep.quasi_periodicity < 1e-10);
}
