#pragma once

#include "ajpoly/qdilog.hpp"

#include <functional>

namespace ajpoly {

/// Piecewise-linear integration contour: the line R + i eps b / sqrt(N)
/// deviating through the apex along the directions i bbar (left leg) and i b
/// (right leg). The same planar path is used in every residue class.
struct ContourSpec {
    double eps = -0.5;   // < 0
    cplx apex{};         // deviation target (may lie below the line: straight path)
    double height = 8;   // truncation |Re| bound of the base line
    std::vector<cplx> points;  // polyline vertices, Re increasing
};

/// Validity regions for the holomorphically continued state integrals.
struct RegionSpec {
    enum Kind { R_eps_a, R_a } kind = R_eps_a;
    double eps = -0.5;
    cplx apex{};
};

/// Build gamma_{eps,a}; validates eps < 0 and that the apex cone condition
/// a in -2 c_b / sqrt(N) - T holds when the apex deviates above the base line.
ContourSpec build_gamma(double eps, cplx apex, double height, const DilogParams& params);

/// Decompose x = xi + i lambda b / sqrt(N) with xi, lambda real.
std::pair<double, double> strip_coords(const DilogParams& params, cplx x);

bool region_contains(const RegionSpec& r, const ANPointC& x, const DilogParams& params);

/// Height of the contour polyline over a given real abscissa (the path is a
/// graph over Re since every leg has positive real direction).
double contour_height(const ContourSpec& c, double re);

/// True when the point lies strictly below the contour graph.
bool below_contour(const ContourSpec& c, cplx p);

struct QuadratureResult {
    cplx value{};
    double error = 0;      // panel estimate + certified tail bound
    double tail_bound = 0;
    size_t evaluations = 0;
    bool converged = false;
};

/// Integrand on A_N^C: f(y, n).
using Integrand = std::function<cplx(cplx, int)>;

/// Adaptive panel quadrature along the contour summed over residue classes
/// with the 1/sqrt(N) measure normalization. decay_minus/plus are the
/// certified exponential rates of the integrand along the two tails (absolute
/// values of the exponents); the contour is extended until the analytic tail
/// bound drops below tol/10. Throws std::runtime_error when the budget cannot
/// be met.
QuadratureResult quadrature(const Integrand& f, const ContourSpec& c,
                            const DilogParams& params, double tol,
                            double decay_minus, double decay_plus);

}  // namespace ajpoly
