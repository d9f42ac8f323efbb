#include "ajpoly/qdilog.hpp"

#include <cmath>
#include <functional>

namespace ajpoly {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;
const cplx I{0.0, 1.0};

// 24-point Gauss-Legendre nodes/weights on [-1, 1]
struct GL24 {
    double x[24], w[24];
    GL24() {
        // Newton iteration on Legendre P_24
        const int n = 24;
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
const GL24& gl24() {
    static GL24 g;
    return g;
}

}  // namespace

DilogParams::DilogParams(int N, cplx b, double guard_radius)
    : N_(N), b_(b), sqrtN_(std::sqrt((double)N)), guard_(guard_radius) {
    if (N < 1 || N % 2 == 0) throw std::domain_error("level N must be odd and positive");
    if (std::abs(std::abs(b) - 1.0) > 1e-14)
        throw std::domain_error("quantum parameter b must be unitary");
    if (b.real() <= 0 || b.imag() < 0)
        throw std::domain_error("require Re(b) > 0 and Im(b) >= 0");
    b_is_real_ = b.imag() == 0.0;
    c_b_ = I * b.real();
    q_half_ = -std::exp(I * PI * (b * b + 1.0) / (double)N);
    cplx cb2 = c_b_ * c_b_;  // real, = -Re(b)^2
    zeta_inv_ = std::exp(I * PI * ((double)N + 2.0 * cb2.real() / N) / 6.0);
}

cplx log_gaussian(const ANPointC& p, const DilogParams& params) {
    double n = params.reduce_mod_N(p.n);
    return I * PI * p.x * p.x - I * PI * n * (n + params.N()) / (double)params.N();
}

cplx gaussian(const ANPointC& p, const DilogParams& params) {
    return std::exp(log_gaussian(p, params));
}

cplx fourier_kernel(const ANPointC& p, const ANPointC& r, const DilogParams& params) {
    double nm = (double)params.reduce_mod_N(p.n) * params.reduce_mod_N(r.n);
    return std::exp(2.0 * PI * I * p.x * r.x - 2.0 * PI * I * nm / (double)params.N());
}

std::vector<PoleZeroPair> pole_zero_locus(const DilogParams& params, int alpha_max,
                                          int beta_max) {
    if (alpha_max < 0 || beta_max < 0) throw std::domain_error("negative lattice bounds");
    std::vector<PoleZeroPair> out;
    for (int a = 0; a <= alpha_max; ++a)
        for (int b = 0; b <= beta_max; ++b) {
            cplx x = -(params.c_b() + I * (double)a * params.b() +
                       I * (double)b * params.bbar()) / params.sqrtN();
            int n = params.reduce_mod_N(a - b);
            out.push_back({{x, n}, {-x, params.reduce_mod_N(-(a - b))}, a, b});
        }
    return out;
}

std::pair<double, double> triangle_coords(const DilogParams& params, cplx x) {
    // solve x + c_b/sqrt(N) = alpha (i b) + beta (i bbar) over the reals
    cplx rhs = x + params.c_b() / params.sqrtN();
    cplx d1 = I * params.b(), d2 = I * params.bbar();
    double det = d1.real() * d2.imag() - d1.imag() * d2.real();
    if (std::abs(det) < 1e-300)
        throw std::domain_error("degenerate triangle: b is real");
    double alpha = (rhs.real() * d2.imag() - rhs.imag() * d2.real()) / det;
    double beta = (d1.real() * rhs.imag() - d1.imag() * rhs.real()) / det;
    return {alpha, beta};
}

bool triangle_contains(const DilogParams& params, cplx x, bool strict) {
    auto [a, b] = triangle_coords(params, x);
    const double eps = 1e-12;  // points on the boundary rays land here by roundoff
    return strict ? (a < -eps && b < -eps) : (a <= eps && b <= eps);
}

namespace {

// distance to the nearest zero/pole lattice point, with the point itself
std::pair<double, ANPointC> nearest_lattice(const DilogParams& params, cplx x) {
    // zeros at -(c_b + i a b + i b bbar)/sqrtN, poles at the negatives; solve
    // the (alpha, beta) coordinates and scan the nearby integer corners.
    double best = 1e300;
    ANPointC bestp{};
    for (int sign = -1; sign <= 1; sign += 2) {
        cplx target = (double)sign * x;
        // target ~ zero lattice: -(c_b + i a b + i b bbar)/sqrtN
        cplx rhs = -target * params.sqrtN() - params.c_b();
        cplx d1 = I * params.b(), d2 = I * params.bbar();
        double det = d1.real() * d2.imag() - d1.imag() * d2.real();
        if (std::abs(det) < 1e-300) continue;
        double af = (rhs.real() * d2.imag() - rhs.imag() * d2.real()) / det;
        double bf = (d1.real() * rhs.imag() - d1.imag() * rhs.real()) / det;
        for (int da = 0; da <= 1; ++da)
            for (int db = 0; db <= 1; ++db) {
                long a = (long)std::floor(af) + da, b = (long)std::floor(bf) + db;
                if (a < 0 || b < 0) continue;
                cplx pt = -(params.c_b() + I * (double)a * params.b() +
                            I * (double)b * params.bbar()) / params.sqrtN();
                double d = std::abs(target - pt);
                if (d < best) {
                    best = d;
                    bestp = ANPointC{(double)sign * pt,
                                     params.reduce_mod_N((int)((a - b) * sign))};
                }
            }
    }
    return {best, bestp};
}

// log(1 + e^s), stable for large |Re s|
cplx log1pexp(cplx s) {
    if (s.real() > 40.0) return s + std::log(1.0 + std::exp(-s));
    cplx w = std::exp(s);
    double aw = std::abs(w);
    if (aw < 1e-4) return w * (1.0 - w * (0.5 - w / 3.0));
    return std::log(1.0 + w);
}

// adaptive Gauss-Legendre on a straight segment; the acceptance floor tracks
// the roundoff of the accumulated L1 mass so panels cannot over-refine
cplx integrate_segment(const std::function<cplx(double)>& f, double a, double b,
                       double tol, int depth = 0) {
    auto& g = gl24();
    double l1 = 0;
    auto rule = [&](double lo, double hi) {
        double h = (hi - lo) / 2, c = (hi + lo) / 2;
        cplx s = 0;
        double m = 0;
        for (int i = 0; i < 24; ++i) {
            cplx v = f(c + h * g.x[i]);
            s += g.w[i] * v;
            m += g.w[i] * std::abs(v);
        }
        l1 += std::abs(h) * m;
        return h * s;
    };
    double mid = (a + b) / 2;
    cplx whole = rule(a, b);
    cplx halves = rule(a, mid) + rule(mid, b);
    double err = std::abs(whole - halves);
    if (err <= tol || err <= 4e-16 * l1 || depth > 24) return halves;
    return integrate_segment(f, a, mid, tol / 2, depth + 1) +
           integrate_segment(f, mid, b, tol / 2, depth + 1);
}

// log Phi on the fundamental strip via the contour integral along Im w = delta
cplx log_dilog_strip(cplx z, const DilogParams& params) {
    const cplx b = params.b();
    const double reb = b.real();
    double delta = std::min(0.75, 0.25 * PI * reb);
    // amplitude control for the oscillatory factor e^{-2izw}
    if (z.real() > 0) delta = std::min(delta, 1.0 / (1.0 + z.real()));
    auto f = [&](double t) -> cplx {
        cplx w{t, delta};
        return std::exp(-2.0 * I * z * w) /
               (4.0 * std::sinh(w * b) * std::sinh(w / b) * w);
    };
    double rate = 2.0 * (reb - std::abs(z.imag()));
    double S = std::max(8.0, (44.0 + 2.0 * std::abs(z.real()) * delta) / rate);
    return integrate_segment(f, -S, S, 1e-14);
}

}  // namespace

cplx log_dilog(const ANPointC& p, const DilogParams& params) {
    if (params.N() != 1)
        throw std::domain_error("dilog: only level N = 1 is realized");
    auto [dist, nearest] = nearest_lattice(params, p.x);
    if (dist < params.guard())
        throw PoleProximityError(nearest, "evaluation within guard radius of pole/zero lattice");

    const cplx b = params.b();
    const double reb = b.real();
    const double smax = 0.45 * reb;
    cplx z = p.x;
    cplx logfac = 0;
    // reduce Im z into the fundamental strip with the b-shift equations
    while (z.imag() > smax) {
        cplx y = z - I * b;  // D(y + ib) = D(y) / (1 + q^{1/2} e^{2 pi b y})
        logfac -= log1pexp(std::log(params.q_half()) + 2.0 * PI * b * y);
        z = y;
    }
    while (z.imag() < -smax) {
        cplx y = z + I * b;  // D(y - ib) = D(y) * (1 + q^{-1/2} e^{2 pi b y})
        logfac += log1pexp(-std::log(params.q_half()) + 2.0 * PI * b * y);
        z = y;
    }
    if (z.real() > 1.0) {
        // inversion: D(z) = zeta_inv^{-1} <z> / D(-z); -z has decaying factor
        cplx lg = I * PI * z * z;  // n = 0 at N = 1
        return -std::log(params.zeta_inv()) + lg - log_dilog_strip(-z, params) + logfac;
    }
    return log_dilog_strip(z, params) + logfac;
}

cplx dilog(const ANPointC& p, const DilogParams& params) {
    return std::exp(log_dilog(p, params));
}

cplx log_phi(const ANPointC& p, const DilogParams& params) {
    return log_dilog({p.x, params.reduce_mod_N(-p.n)}, params);
}

cplx phi(const ANPointC& p, const DilogParams& params) {
    return std::exp(log_phi(p, params));
}

}  // namespace ajpoly
