#pragma once

#include "ajpoly/qdilog.hpp"

#include <functional>
#include <vector>

namespace ajpoly {

/// Level data t = N + iS with the trivialization parameter r and the derived
/// quantum parameter b = -i e^{2rN}, e^{4rN} = -conj(t)/t.
class QuantParams {
public:
    QuantParams(int N, double S);

    int N() const { return N_; }
    double S() const { return S_; }
    cplx t() const { return t_; }
    cplx r() const { return r_; }
    cplx b() const { return b_; }
    cplx q_via_b() const;  // exp(2 pi i (b^2+1)/N)
    cplx q_via_t() const;  // e^{4 pi i / t}
    cplx alpha() const;    // (e^{2rN} - 1)/N, the shift amplitude

private:
    int N_;
    double S_;
    cplx t_, r_, b_;
};

/// Smooth section of the level-N bundle sampled on the uniform grid over
/// [0,1)^2; s(u_i, v_j) with u_i = i/nu, v_j = j/nv.
struct TorusSection {
    int nu = 0, nv = 0;
    std::vector<cplx> vals;  // row-major: vals[i * nv + j]

    cplx& at(int i, int j) { return vals[(size_t)i * nv + j]; }
    cplx at(int i, int j) const { return vals[(size_t)i * nv + j]; }
};

/// Function on A_N evaluable at complex first argument (the test family is
/// entire, so complex shifts are exact).
using ANFunction = std::function<cplx(cplx, int)>;

/// Gaussian family member A_n exp(-pi (x - mu)^2 + c x).
struct GaussianAN {
    std::vector<cplx> amp;  // per residue class, size N
    cplx mu{}, c{};

    ANFunction fn() const;
    double l2_norm_sq(int N) const;  // closed form, with the 1/sqrt(N) measure
};

/// Truncated transform s(u,v) = e^{i pi N u v} sum_{|m| <= M} f(sqrtN u + m/sqrtN, -m) e^{2 pi i m v}.
/// Throws when the dropped tail is not negligible for the given family.
TorusSection wgz_forward(const ANFunction& f, int M, int nu, int nv, const QuantParams& qp);

enum class TorusOp { grad_u, grad_v, mult_e2piu, mult_e2piv, mhat, lhat };

/// Apply an operator on the torus side. Derivatives and complex shifts act
/// spectrally on the phase-stripped data; multiplication operators act
/// pointwise.
TorusSection torus_operator_apply(TorusOp op, const TorusSection& s, const QuantParams& qp);

double section_max(const TorusSection& s);
double section_norm(const TorusSection& s);  // discrete L^2 over [0,1)^2
double max_diff(const TorusSection& a, const TorusSection& b);

struct WgzReport {
    double grad_u_residual = 0;
    double grad_v_residual = 0;
    double mult_u_residual = 0;
    double mult_v_residual = 0;
    double mhat_residual = 0;
    double lhat_residual = 0;
    double commutator_residual = 0;
    double isometry_residual = 0;
    double q_formula_diff = 0;
    double quasi_periodicity = 0;
    int family_size = 0;
};

/// Verifies the transform relations affecting the operator correspondence on a
/// Gaussian family; residuals are max grid errors relative to the section peak.
WgzReport verify_an_correspondence(const QuantParams& qp, int grid, int truncation);

}  // namespace ajpoly
