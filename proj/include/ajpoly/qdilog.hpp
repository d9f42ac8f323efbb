#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace ajpoly {

using cplx = std::complex<double>;

/// Point of the complexified group C + Z/NZ.
struct ANPointC {
    cplx x{};
    int n = 0;  // residue class, reduced mod N on construction by the callers
};

struct PoleProximityError : std::runtime_error {
    ANPointC nearest;
    PoleProximityError(const ANPointC& p, const std::string& msg)
        : std::runtime_error(msg), nearest(p) {}
};

/// Analytic configuration: level N (odd), unit parameter b, derived constants.
class DilogParams {
public:
    DilogParams(int N, cplx b, double guard_radius = 1e-6);

    int N() const { return N_; }
    cplx b() const { return b_; }
    cplx bbar() const { return std::conj(b_); }
    double sqrtN() const { return sqrtN_; }
    cplx c_b() const { return c_b_; }          // i Re(b)
    cplx q_half() const { return q_half_; }    // -exp(i pi (b^2+1)/N)
    cplx zeta_inv() const { return zeta_inv_; }
    double guard() const { return guard_; }
    bool b_is_real() const { return b_is_real_; }  // degenerate triangle, flagged

    int reduce_mod_N(int n) const { return ((n % N_) + N_) % N_; }

private:
    int N_;
    cplx b_;
    double sqrtN_;
    cplx c_b_, q_half_, zeta_inv_;
    double guard_;
    bool b_is_real_;
};

/// Gaussian <(x,n)> = e^{i pi x^2} e^{-i pi n (n+N)/N}.
cplx gaussian(const ANPointC& p, const DilogParams& params);
cplx log_gaussian(const ANPointC& p, const DilogParams& params);

/// Fourier kernel <(x,n),(y,m)> = e^{2 pi i x y} e^{-2 pi i n m / N}.
cplx fourier_kernel(const ANPointC& p, const ANPointC& r, const DilogParams& params);

/// log D_b(x, n). Realized for N = 1 by quadrature of the contour-integral
/// representation on the fundamental strip, extended by the two difference
/// equations and the inversion relation. Throws PoleProximityError within the
/// guard radius of the pole/zero lattice and std::domain_error for N >= 3
/// (unimplemented extension).
cplx log_dilog(const ANPointC& p, const DilogParams& params);
cplx dilog(const ANPointC& p, const DilogParams& params);

/// phi(x, n) = D(x, -n).
cplx log_phi(const ANPointC& p, const DilogParams& params);
cplx phi(const ANPointC& p, const DilogParams& params);

struct PoleZeroPair {
    ANPointC zero;  // p_{alpha,beta}
    ANPointC pole;  // -p_{alpha,beta}
    int alpha = 0, beta = 0;
};

/// Lattice p_{alpha,beta} = (-(c_b + i a b + i b bbar)/sqrt(N), a - b) for
/// 0 <= alpha <= alpha_max, 0 <= beta <= beta_max.
std::vector<PoleZeroPair> pole_zero_locus(const DilogParams& params, int alpha_max,
                                          int beta_max);

/// Membership in the closed infinite triangle T: x below both lines through
/// -c_b/sqrt(N) with directions i b and i bbar. strict=true tests the interior.
bool triangle_contains(const DilogParams& params, cplx x, bool strict = false);

/// Coordinates (alpha, beta) with x + c_b/sqrt(N) = alpha (i b) + beta (i bbar);
/// T-membership is alpha <= 0 && beta <= 0.
std::pair<double, double> triangle_coords(const DilogParams& params, cplx x);

}  // namespace ajpoly
