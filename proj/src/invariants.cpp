#include "ajpoly/invariants.hpp"

#include <cmath>
#include <random>

namespace ajpoly {

namespace {
constexpr double PI = 3.141592653589793238462643383279502884;
const cplx I{0.0, 1.0};

cplx ipow(cplx z, long k) {
    if (k == 0) return 1.0;
    bool inv = k < 0;
    unsigned long e = inv ? -(unsigned long)k : (unsigned long)k;
    cplx r = 1.0, base = z;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return inv ? 1.0 / r : r;
}
}  // namespace

KnotId knot_from_string(const std::string& s) {
    if (s == "41" || s == "4_1") return KnotId::fig8;
    if (s == "52" || s == "5_2") return KnotId::five2;
    throw std::domain_error("unknown knot: " + s);
}

const char* knot_name(KnotId k) { return k == KnotId::fig8 ? "41" : "52"; }

cplx vl_eval_numeric(const VLaurent& c, const DilogParams& params) {
    cplx s = 0;
    for (auto& [e, co] : c.terms()) s += co.get_d() * ipow(params.q_half(), e);
    return s;
}

cplx m_mult(const ANPointC& p, const DilogParams& params) {
    return std::exp(-2.0 * PI * params.b() * p.x / params.sqrtN() +
                    2.0 * PI * I * (double)p.n / (double)params.N());
}

ANPointC l_shift(const ANPointC& p, int j, const DilogParams& params) {
    return {p.x - I * (double)j * params.b() / params.sqrtN(),
            params.reduce_mod_N(p.n + j)};
}

cplx apply_operator_x(const NCPoly& word, const std::function<cplx(ANPointC)>& f,
                      const ANPointC& x, const DilogParams& params) {
    cplx sum = 0;
    for (auto& [m, co] : word.terms()) {
        if (m.c != 0 || m.d != 0)
            throw std::domain_error("apply_operator_x requires a y-free word");
        cplx term = vl_eval_numeric(co, params) * ipow(m_mult(x, params), m.a) *
                    f(l_shift(x, m.b, params));
        sum += term;
    }
    return sum;
}

cplx apply_operator_xy(const NCPoly& word, const std::function<cplx(ANPointC, ANPointC)>& f,
                       const ANPointC& x, const ANPointC& y, const DilogParams& params) {
    cplx sum = 0;
    for (auto& [m, co] : word.terms()) {
        cplx term = vl_eval_numeric(co, params) * ipow(m_mult(x, params), m.a) *
                    ipow(m_mult(y, params), m.c) *
                    f(l_shift(x, m.b, params), l_shift(y, m.d, params));
        sum += term;
    }
    return sum;
}

double word_residual_xy(const NCPoly& word, const std::function<cplx(ANPointC, ANPointC)>& f,
                        const ANPointC& x, const ANPointC& y, const DilogParams& params) {
    cplx sum = 0;
    double maxterm = 0;
    for (auto& [m, co] : word.terms()) {
        cplx term = vl_eval_numeric(co, params) * ipow(m_mult(x, params), m.a) *
                    ipow(m_mult(y, params), m.c) *
                    f(l_shift(x, m.b, params), l_shift(y, m.d, params));
        sum += term;
        maxterm = std::max(maxterm, std::abs(term));
    }
    return maxterm == 0 ? 0 : std::abs(sum) / maxterm;
}

cplx log_integrand(KnotId knot, const ANPointC& x, const ANPointC& y,
                   const DilogParams& params) {
    if (knot == KnotId::fig8) {
        ANPointC xy{x.x - y.x, params.reduce_mod_N(x.n - y.n)};
        return log_phi(xy, params) - 2.0 * log_gaussian(xy, params) -
               log_phi(y, params) + 2.0 * log_gaussian(y, params);
    }
    ANPointC yp{y.x + x.x, params.reduce_mod_N(y.n + x.n)};
    ANPointC ym{y.x - x.x, params.reduce_mod_N(y.n - x.n)};
    return log_gaussian(y, params) - log_gaussian(x, params) - log_phi(yp, params) -
           log_phi(y, params) - log_phi(ym, params);
}

cplx integrand(KnotId knot, const ANPointC& x, const ANPointC& y,
               const DilogParams& params) {
    return std::exp(log_integrand(knot, x, y, params));
}

std::pair<ContourSpec, RegionSpec> choose_contour(KnotId knot, const ANPointC& x,
                                                  const DilogParams& params) {
    const cplx up = I * (params.b() + params.bbar());  // vertical direction
    const double reb = params.b().real();
    if (knot == KnotId::fig8) {
        auto [xi, lambda] = strip_coords(params, x.x);
        double eps = std::min({2 * lambda, -lambda, 0.0}) - 0.75;
        // apex: a = x + c_b/sqrtN + s * up with the cone condition satisfied
        auto [u1, u2] = triangle_coords(params, x.x + params.c_b() / params.sqrtN());
        // cone condition coords: -(a + 2 c_b/sqrtN) in T
        double s = std::max({1.0, -u1 + 1.0, -u2 + 1.0});
        // triangle_coords uses the basis (i b, i bbar); up = i(b + bbar) adds
        // (s, s) to the coordinates of x - a decomposition
        cplx apex = x.x + params.c_b() / params.sqrtN() + s * up;
        RegionSpec r{RegionSpec::R_eps_a, eps, apex};
        double slope = params.b().imag() / reb;
        double legs = std::abs(apex.real()) +
                      (apex.imag() + std::abs(eps) + 1.0) * (slope + 0.1) + 6.0;
        ContourSpec c = build_gamma(eps, apex, std::max(8.0, legs), params);
        if (!region_contains(r, x, params))
            throw std::runtime_error("no valid region found for the requested point");
        return {c, r};
    }
    // 5_2: apex on the imaginary axis high enough that both +-x lie in R_a
    double need = 0;
    for (int sgn = -1; sgn <= 1; sgn += 2) {
        cplx z = (double)sgn * x.x - params.c_b() / params.sqrtN();
        auto [a1, b1] = triangle_coords(params, z);
        need = std::max({need, a1, b1});
    }
    double s = need + 1.0;
    cplx apex = s * up;  // up has positive imaginary part 2 Re b
    double eps = -0.75;
    RegionSpec r{RegionSpec::R_a, eps, apex};
    double slope = params.b().imag() / reb;
    double legs = std::abs(apex.real()) +
                  (apex.imag() + std::abs(eps) + 1.0) * (slope + 0.1) + 6.0;
    ContourSpec c = build_gamma(eps, apex, std::max(8.0, legs), params);
    if (!region_contains(r, x, params))
        throw std::runtime_error("no valid region found for the requested point");
    return {c, r};
}

namespace {

// certified tail decay rates of the integrand along the contour base line
std::pair<double, double> decay_rates(KnotId knot, const ANPointC& x, double eps,
                                      const DilogParams& params) {
    const double c = 2.0 * PI * params.b().real() / params.sqrtN();
    if (knot == KnotId::fig8) {
        auto [xi, lambda] = strip_coords(params, x.x);
        return {c * (-(eps + lambda)), c * (2 * lambda - eps)};
    }
    return {c * (-eps), 2.0 * c * (-eps)};
}

}  // namespace

ChiResult chi_on(KnotId knot, const ANPointC& x, const ContourSpec& c,
                 const RegionSpec& r, const DilogParams& params, double tol) {
    if (!region_contains(r, x, params))
        throw std::runtime_error("chi: point outside the validity region");
    // pole clearance: zeros of phi(y) and the x-shifted lattices must stay below
    int depth = (int)(std::abs(c.points.front().imag()) + std::abs(c.apex) + 8);
    auto lattice = pole_zero_locus(params, depth, depth);
    for (auto& pz : lattice) {
        std::vector<cplx> poles;
        if (knot == KnotId::fig8) {
            poles = {pz.zero.x, x.x + pz.zero.x};
        } else {
            poles = {pz.zero.x, x.x + pz.zero.x, -x.x + pz.zero.x};
        }
        for (cplx p : poles)
            if (!below_contour(c, p) && std::abs(p.real()) <= c.height)
                throw std::runtime_error("chi: integrand pole not below the contour");
    }
    auto [rm, rp] = decay_rates(knot, x, c.eps, params);
    Integrand f = [&](cplx y, int n) {
        return std::exp(log_integrand(knot, x, ANPointC{y, n}, params));
    };
    ChiResult out;
    out.quad = quadrature(f, c, params, tol, rm, rp);
    out.value = out.quad.value;
    out.contour = c;
    out.region = r;
    return out;
}

ChiResult chi(KnotId knot, const ANPointC& x, const DilogParams& params, double tol) {
    auto [c, r] = choose_contour(knot, x, params);
    return chi_on(knot, x, c, r, params, tol);
}

cplx invariant_prefactor(KnotId knot, const ANPointC& x, const DilogParams& params) {
    double k = knot == KnotId::fig8 ? 4.0 : 2.0;
    return std::exp(k * PI * I * params.c_b() * x.x / params.sqrtN());
}

ChiResult invariant_J(KnotId knot, const ANPointC& x, const DilogParams& params,
                      double tol) {
    ChiResult r = chi(knot, x, params, tol);
    r.value *= invariant_prefactor(knot, x, params);
    return r;
}

IntegrandAnnihilation check_integrand_annihilation(KnotId knot, const NCPoly& g1,
                                                   const NCPoly& g2, int count,
                                                   uint64_t seed,
                                                   const DilogParams& params) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    };
    IntegrandAnnihilation rep;
    auto f = [&](ANPointC xx, ANPointC yy) {
        return integrand(knot, xx, yy, params);
    };
    int produced = 0, guard = 0;
    while (produced < count && guard < 100 * count) {
        ++guard;
        ANPointC x{cplx(uniform(-1.5, 1.5), uniform(-0.05, 0.05)),
                   (int)(rng() % params.N())};
        ANPointC y{cplx(uniform(-1.5, 1.5), uniform(-0.05, 0.05)),
                   (int)(rng() % params.N())};
        try {
            double r1 = word_residual_xy(g1, f, x, y, params);
            double r2 = word_residual_xy(g2, f, x, y, params);
            rep.residuals_g1.push_back(r1);
            rep.residuals_g2.push_back(r2);
            rep.max_residual_g1 = std::max(rep.max_residual_g1, r1);
            rep.max_residual_g2 = std::max(rep.max_residual_g2, r2);
            ++produced;
        } catch (const PoleProximityError&) {
            // resample deterministically
        }
    }
    if (produced < count)
        throw std::runtime_error("could not draw enough pole-free sample pairs");
    return rep;
}

InvariantAnnihilation check_invariant_annihilation(KnotId knot, const NCPoly& word,
                                                   const ANPointC& x,
                                                   const DilogParams& params, double tol) {
    InvariantAnnihilation rep;
    rep.tol = tol;
    // distinct lx-shifts needed
    std::map<int, cplx> chi_at_shift;
    for (auto& [m, co] : word.terms()) {
        if (m.c != 0 || m.d != 0)
            throw std::domain_error("invariant annihilation wants an (mx, lx) word");
        if (!chi_at_shift.count(m.b)) {
            ANPointC xs = l_shift(x, m.b, params);
            chi_at_shift[m.b] = chi(knot, xs, params, tol).value;
        }
    }
    for (auto& [m, co] : word.terms()) {
        cplx term = vl_eval_numeric(co, params) * ipow(m_mult(x, params), m.a) *
                    chi_at_shift[m.b];
        rep.sum += term;
        rep.term_magnitudes.push_back(std::abs(term));
        rep.max_term = std::max(rep.max_term, std::abs(term));
    }
    rep.rel_residual = rep.max_term == 0 ? 0 : std::abs(rep.sum) / rep.max_term;
    return rep;
}

std::pair<double, double> measure_tail_decay(KnotId knot, double eps, const ANPointC& x,
                                             const DilogParams& params) {
    cplx base = I * eps * params.b() / params.sqrtN();
    auto mag = [&](double t) {
        return std::abs(integrand(knot, x, ANPointC{cplx(t, base.imag()), 0}, params));
    };
    double l6 = mag(-6), l12 = mag(-12), r6 = mag(6), r12 = mag(12);
    return {l12 / l6, r12 / r6};
}

}  // namespace ajpoly
