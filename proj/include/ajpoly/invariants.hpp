#pragma once

#include "ajpoly/contour.hpp"
#include "ajpoly/ncpoly.hpp"

namespace ajpoly {

enum class KnotId { fig8, five2 };

KnotId knot_from_string(const std::string& s);  // "41" / "52"
const char* knot_name(KnotId k);

/// Numeric value of a VLaurent coefficient at v = q^{1/2} of the parameters.
cplx vl_eval_numeric(const VLaurent& c, const DilogParams& params);

/// Multiplier of the m-hat operator at a base point:
/// e^{-2 pi b x / sqrt(N)} e^{2 pi i n / N}.
cplx m_mult(const ANPointC& p, const DilogParams& params);

/// Shift of the l-hat operator applied j times: (x, n) -> (x - i j b/sqrt(N), n + j).
ANPointC l_shift(const ANPointC& p, int j, const DilogParams& params);

/// Action of a normal-ordered word on a one-argument function (x pair only):
/// sum over monomials of coeff * multiplier(x)^a * f(shifted x). Monomials must
/// be y-free.
cplx apply_operator_x(const NCPoly& word, const std::function<cplx(ANPointC)>& f,
                      const ANPointC& x, const DilogParams& params);

/// Same with both pairs acting on a two-argument function.
cplx apply_operator_xy(const NCPoly& word, const std::function<cplx(ANPointC, ANPointC)>& f,
                       const ANPointC& x, const ANPointC& y, const DilogParams& params);

/// Relative residual |sum| / max |term| of a word applied to f; terms are the
/// individual monomial contributions.
double word_residual_xy(const NCPoly& word, const std::function<cplx(ANPointC, ANPointC)>& f,
                        const ANPointC& x, const ANPointC& y, const DilogParams& params);

/// log and value of the state integrand.
cplx log_integrand(KnotId knot, const ANPointC& x, const ANPointC& y,
                   const DilogParams& params);
cplx integrand(KnotId knot, const ANPointC& x, const ANPointC& y,
               const DilogParams& params);

struct ChiResult {
    cplx value{};
    QuadratureResult quad;
    ContourSpec contour;
    RegionSpec region;
};

/// Admissible contour and region for evaluating chi at x (automated choice).
std::pair<ContourSpec, RegionSpec> choose_contour(KnotId knot, const ANPointC& x,
                                                  const DilogParams& params);

/// chi over an explicit contour; the region membership of x is enforced.
ChiResult chi_on(KnotId knot, const ANPointC& x, const ContourSpec& c,
                 const RegionSpec& r, const DilogParams& params, double tol);

/// chi with the automated contour.
ChiResult chi(KnotId knot, const ANPointC& x, const DilogParams& params, double tol);

/// J = prefactor * chi; the 4_1 prefactor is e^{4 pi i c_b x/sqrt(N)}, the 5_2
/// one e^{2 pi i c_b x/sqrt(N)}.
cplx invariant_prefactor(KnotId knot, const ANPointC& x, const DilogParams& params);
ChiResult invariant_J(KnotId knot, const ANPointC& x, const DilogParams& params, double tol);

struct IntegrandAnnihilation {
    double max_residual_g1 = 0;
    double max_residual_g2 = 0;
    std::vector<double> residuals_g1, residuals_g2;
};

/// Applies the transcribed annihilators to the integrand at pseudorandom
/// sample pairs near the real locus (seeded, deterministic).
IntegrandAnnihilation check_integrand_annihilation(KnotId knot, const NCPoly& g1,
                                                   const NCPoly& g2, int count,
                                                   uint64_t seed,
                                                   const DilogParams& params);

struct InvariantAnnihilation {
    double rel_residual = 0;
    double max_term = 0;
    cplx sum{};
    std::vector<double> term_magnitudes;
    double tol = 0;
};

/// Applies an (mx, lx) word to chi at x; every shifted chi value is computed
/// over its own admissible contour. Throws when no valid region exists for a
/// shifted argument.
InvariantAnnihilation check_invariant_annihilation(KnotId knot, const NCPoly& word,
                                                   const ANPointC& x,
                                                   const DilogParams& params, double tol);

/// Tail decay diagnostic for the eps-sign question: samples |integrand| along
/// R + i eps b/sqrt(N) at |Re y| in {6, 9, 12} and reports the magnitude
/// ratios (left tail, right tail); ratios < 1 certify decay.
std::pair<double, double> measure_tail_decay(KnotId knot, double eps, const ANPointC& x,
                                             const DilogParams& params);

}  // namespace ajpoly
