#include "doctest.h"

#include "ajpoly/vratio.hpp"

#include <random>

using namespace ajpoly;

namespace {

VLaurent v(long e, long c = 1) { return VLaurent::mono(e, c); }

bool kernel_exact(const ExactMatrix& M, const std::vector<std::vector<VRatio>>& basis) {
    for (auto& k : basis) {
        for (size_t r = 0; r < M.rows(); ++r) {
            VRatio acc;
            for (size_t c = 0; c < M.cols(); ++c)
                if (!M.at(r, c).is_zero() && !k[c].is_zero())
                    acc = acc + VRatio(M.at(r, c)) * k[c];
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("single relation [v, -1]") {
    ExactMatrix M(1, 2);
    M.at(0, 0) = v(1);
    M.at(0, 1) = v(0, -1);
    auto basis = exact_kernel(M);
    REQUIRE(basis.size() == 1);
    CHECK(kernel_exact(M, basis));
    // kernel is spanned by (1, v)
    VRatio ratio = basis[0][1] / basis[0][0];
    CHECK(ratio == VRatio(v(1)));
}

TEST_CASE("identity has trivial kernel") {
    ExactMatrix M(2, 2);
    M.at(0, 0) = v(0);
    M.at(1, 1) = v(0);
    CHECK(exact_kernel(M).empty());
}

TEST_CASE("2x3 hand solve") {
    // [[1,1,0],[0,v,v]] -> kernel spanned by (1, -1, 1)
    ExactMatrix M(2, 3);
    M.at(0, 0) = v(0);
    M.at(0, 1) = v(0);
    M.at(1, 1) = v(1);
    M.at(1, 2) = v(1);
    auto basis = exact_kernel(M);
    REQUIRE(basis.size() == 1);
    CHECK(kernel_exact(M, basis));
    CHECK(basis[0][1] / basis[0][0] == -VRatio(v(0)));
    CHECK(basis[0][2] / basis[0][0] == VRatio(v(0)));
}

TEST_CASE("random rank-deficient matrices solve exactly") {
    std::mt19937_64 rng(606);
    auto rnd = [&]() {
        VLaurent p;
        int nt = (int)(rng() % 3);
        for (int i = 0; i <= nt; ++i)
            p += VLaurent::mono((long)(rng() % 5) - 2, (long)(rng() % 7) - 3);
        return p;
    };
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 4, m = 6;  // wide: kernel dim >= 2
        ExactMatrix M(n, m);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < m; ++c)
                if (rng() % 2) M.at(r, c) = rnd();
        auto basis = exact_kernel(M);
        CHECK(kernel_exact(M, basis));
        CHECK(basis.size() >= m - n);
    }
}
