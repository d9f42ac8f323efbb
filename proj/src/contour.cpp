#include "ajpoly/contour.hpp"

#include <cmath>

namespace ajpoly {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;
const cplx I{0.0, 1.0};

cplx intersect(cplx p0, cplx d0, cplx p1, cplx d1) {
    double det = d0.real() * d1.imag() - d0.imag() * d1.real();
    cplx rhs = p1 - p0;
    double t = (rhs.real() * d1.imag() - rhs.imag() * d1.real()) / det;
    return p0 + t * d0;
}

struct GL15 {
    double x[15], w[15];
    GL15() {
        const int n = 15;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0 = 1, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1);
            x[n - 1 - i] = t;
            w[n - 1 - i] = 2.0 / ((1 - t * t) * dp * dp);
        }
    }
};
const GL15& gl15() {
    static GL15 g;
    return g;
}

struct PanelQuad {
    const Integrand* f;
    int n;
    size_t evals = 0;
    double l1 = 0;

    cplx rule(cplx za, cplx zb) {
        auto& g = gl15();
        cplx h = (zb - za) / 2.0, c = (za + zb) / 2.0;
        cplx s = 0;
        double m = 0;
        for (int i = 0; i < 15; ++i) {
            cplx v = (*f)(c + h * g.x[i], n);
            s += g.w[i] * v;
            m += g.w[i] * std::abs(v);
        }
        evals += 15;
        l1 += std::abs(h) * m;
        return h * s;
    }

    // returns (value, error estimate); the floor tracks roundoff of the
    // accumulated L1 mass so refinement terminates
    std::pair<cplx, double> adapt(cplx za, cplx zb, double tol, int depth = 0) {
        double l1_before = l1;
        cplx mid = (za + zb) / 2.0;
        cplx whole = rule(za, zb);
        cplx halves = rule(za, mid) + rule(mid, zb);
        double err = std::abs(whole - halves);
        double floor = 4e-16 * (l1 - l1_before);
        if (err <= tol || err <= floor || depth > 22) return {halves, err};
        auto [lv, le] = adapt(za, mid, tol / 2, depth + 1);
        auto [rv, re] = adapt(mid, zb, tol / 2, depth + 1);
        return {lv + rv, le + re};
    }
};

}  // namespace

std::pair<double, double> strip_coords(const DilogParams& params, cplx x) {
    // x = xi + lambda * (i b)/sqrt(N), xi real
    cplx d = I * params.b() / params.sqrtN();
    double lambda = x.imag() / d.imag();
    double xi = x.real() - lambda * d.real();
    return {xi, lambda};
}

ContourSpec build_gamma(double eps, cplx apex, double height, const DilogParams& params) {
    if (eps >= 0) throw std::domain_error("contour offset eps must be negative");
    ContourSpec c;
    c.eps = eps;
    c.apex = apex;
    c.height = height;
    // the base line {t + i eps b/sqrt(N) : t real} is horizontal
    cplx base = I * eps * params.b() / params.sqrtN();
    cplx left(-height, base.imag());
    cplx right(height, base.imag());
    if (apex.imag() <= base.imag()) {
        c.points = {left, right};
        return c;
    }
    // apex deviates upward: require the cone condition a in -2 c_b/sqrt(N) - T
    auto [ta, tb] = triangle_coords(params, -(apex + 2.0 * params.c_b() / params.sqrtN()));
    if (!(ta <= 0 && tb <= 0))
        throw std::domain_error("contour apex outside the admissible cone");
    cplx P1 = intersect(base, 1.0, apex, I * params.bbar());
    cplx P2 = intersect(base, 1.0, apex, I * params.b());
    if (P1.real() <= -height || P2.real() >= height)
        throw std::domain_error("contour height too small for the apex deviation");
    c.points = {left, P1, apex, P2, right};
    return c;
}

bool region_contains(const RegionSpec& r, const ANPointC& x, const DilogParams& params) {
    if (r.kind == RegionSpec::R_eps_a) {
        auto [xi, lambda] = strip_coords(params, x.x);
        if (!(r.eps / 2 < lambda && lambda < -r.eps)) return false;
        // x in T + apex, strictly
        return triangle_contains(params, x.x - r.apex, true);
    }
    // R_a: x in (a + c_b/sqrtN + T) strict intersect (-a - c_b/sqrtN - T) strict
    cplx shift = r.apex + params.c_b() / params.sqrtN();
    return triangle_contains(params, x.x - shift, true) &&
           triangle_contains(params, -(x.x + shift), true);
}

double contour_height(const ContourSpec& c, double re) {
    const auto& p = c.points;
    if (re <= p.front().real()) return p.front().imag();
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        if (re <= p[i + 1].real()) {
            double t = (re - p[i].real()) / (p[i + 1].real() - p[i].real());
            return p[i].imag() + t * (p[i + 1].imag() - p[i].imag());
        }
    }
    return p.back().imag();
}

bool below_contour(const ContourSpec& c, cplx pt) {
    return pt.imag() < contour_height(c, pt.real());
}

QuadratureResult quadrature(const Integrand& f, const ContourSpec& c,
                            const DilogParams& params, double tol,
                            double decay_minus, double decay_plus) {
    if (decay_minus <= 0 || decay_plus <= 0)
        throw std::runtime_error("quadrature requires certified positive decay rates");
    QuadratureResult out;
    const int N = params.N();
    const double norm = 1.0 / params.sqrtN();
    double panel_tol = tol / (2.0 * N * std::max<size_t>(1, c.points.size() - 1));

    double tail = 0;
    for (int n = 0; n < N; ++n) {
        PanelQuad pq{&f, n};
        for (size_t i = 0; i + 1 < c.points.size(); ++i) {
            auto [v, e] = pq.adapt(c.points[i], c.points[i + 1], panel_tol);
            out.value += norm * v;
            out.error += norm * e;
        }
        // extend tails until the analytic bound certifies tol/10
        for (int side = 0; side < 2; ++side) {
            double rate = side == 0 ? decay_minus : decay_plus;
            cplx dir = side == 0 ? cplx(-1, 0) : cplx(1, 0);
            cplx end = side == 0 ? c.points.front() : c.points.back();
            double step = 2.0;
            int guard = 0;
            while (true) {
                double mag = std::abs(f(end, n));
                double bound = norm * mag / rate;
                if (bound < tol / 10) {
                    tail += bound;
                    break;
                }
                auto [v, e] = pq.adapt(end, end + dir * step, panel_tol);
                out.value += norm * (side == 0 ? -v : v);
                out.error += norm * e;
                end += dir * step;
                if (++guard > 200)
                    throw std::runtime_error("quadrature tail does not certify decay");
            }
        }
        out.evaluations += pq.evals;
    }
    out.tail_bound = tail;
    out.error += tail;
    out.converged = out.error <= tol;
    if (!out.converged) throw std::runtime_error("quadrature error budget not met");
    return out;
}

}  // namespace ajpoly
