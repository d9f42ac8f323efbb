#include "ajpoly/wgz.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace ajpoly {

namespace {
constexpr double PI = 3.141592653589793238462643383279502884;
const cplx I{0.0, 1.0};

void fft_inplace(std::vector<cplx>& a, int sign) {
    static std::mutex mu;
    std::scoped_lock lk(mu);
    static std::map<std::pair<size_t, int>, fftw_plan> plans;
    auto key = std::make_pair(a.size(), sign);
    auto it = plans.find(key);
    fftw_plan plan;
    if (it == plans.end()) {
        std::vector<cplx> tmp(a.size());
        plan = fftw_plan_dft_1d((int)a.size(), reinterpret_cast<fftw_complex*>(tmp.data()),
                                reinterpret_cast<fftw_complex*>(tmp.data()),
                                sign, FFTW_ESTIMATE);
        plans[key] = plan;
    } else {
        plan = it->second;
    }
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(a.data()),
                     reinterpret_cast<fftw_complex*>(a.data()));
}

}  // namespace

QuantParams::QuantParams(int N, double S) : N_(N), S_(S), t_(cplx(N, S)) {
    if (N < 1) throw std::domain_error("level N must be positive");
    cplx target = -std::conj(t_) / t_;
    r_ = std::log(target) / cplx(4.0 * N);
    b_ = -I * std::exp(2.0 * r_ * (double)N);
    if (std::abs(std::abs(std::exp(4.0 * r_ * (double)N)) - 1.0) > 1e-12)
        throw std::logic_error("trivialization parameter not unitary");
    if (std::abs(std::exp(4.0 * r_ * (double)N) * t_ + std::conj(t_)) > 1e-9 * std::abs(t_))
        throw std::logic_error("e^{4rN} t != -conj(t)");
    if (std::abs(std::abs(b_) - 1.0) > 1e-12)
        throw std::logic_error("derived b is not unitary");
}

cplx QuantParams::q_via_b() const {
    return std::exp(2.0 * PI * I * (b_ * b_ + 1.0) / (double)N_);
}

cplx QuantParams::q_via_t() const { return std::exp(4.0 * PI * I / t_); }

cplx QuantParams::alpha() const {
    return (std::exp(2.0 * r_ * (double)N_) - 1.0) / (double)N_;
}

ANFunction GaussianAN::fn() const {
    auto amp_ = amp;
    cplx mu_ = mu, c_ = c;
    return [amp_, mu_, c_](cplx x, int n) {
        int N = (int)amp_.size();
        int nn = ((n % N) + N) % N;
        return amp_[nn] * std::exp(-PI * (x - mu_) * (x - mu_) + c_ * x);
    };
}

double GaussianAN::l2_norm_sq(int N) const {
    // int |A e^{-pi (x-mu)^2 + c x}|^2 dx with the normalized measure
    double total = 0;
    for (int n = 0; n < N; ++n) {
        double A2 = std::norm(amp[n]);
        double immu = mu.imag(), remu = mu.real();
        // |f(x)|^2 = A2 e^{2 pi immu^2} e^{-2 pi (x - remu)^2} e^{2 Re(c) x} on R
        double g = 2.0 * c.real();
        total += A2 * std::exp(2.0 * PI * immu * immu) *
                 std::exp(g * remu + g * g / (8.0 * PI)) * std::sqrt(0.5);
    }
    return total / std::sqrt((double)N);
}

TorusSection wgz_forward(const ANFunction& f, int M, int nu, int nv, const QuantParams& qp) {
    const int N = qp.N();
    const double sqrtN = std::sqrt((double)N);
    TorusSection s;
    s.nu = nu;
    s.nv = nv;
    s.vals.assign((size_t)nu * nv, 0.0);
    double maxval = 0, tailval = 0;
    for (int i = 0; i < nu; ++i) {
        double u = (double)i / nu;
        // inner sum coefficients for this u
        std::vector<cplx> fm(2 * M + 1);
        for (int m = -M; m <= M; ++m) {
            fm[m + M] = f(sqrtN * u + m / sqrtN, -m);
            double a = std::abs(fm[m + M]);
            maxval = std::max(maxval, a);
            if (std::abs(m) == M) tailval = std::max(tailval, a);
        }
        for (int j = 0; j < nv; ++j) {
            double v = (double)j / nv;
            cplx acc = 0;
            for (int m = -M; m <= M; ++m)
                acc += fm[m + M] * std::exp(2.0 * PI * I * (double)m * v);
            s.at(i, j) = std::exp(I * PI * (double)N * u * v) * acc;
        }
    }
    if (maxval > 0 && tailval > 1e-12 * maxval)
        throw std::runtime_error("wgz_forward: truncation tail not negligible");
    return s;
}

namespace {

// phase-stripped mode data g(u_i, v) = sum_m c_m(u_i) e^{2 pi i m v}
struct Modes {
    int nu, nv, N;
    std::vector<cplx> c;  // [(size_t)mi * nu + i]
};

Modes strip_modes(const TorusSection& s, const QuantParams& qp) {
    Modes md{s.nu, s.nv, qp.N(), std::vector<cplx>((size_t)s.nu * s.nv)};
    std::vector<cplx> row(s.nv);
    for (int i = 0; i < s.nu; ++i) {
        double u = (double)i / s.nu;
        for (int j = 0; j < s.nv; ++j) {
            double v = (double)j / s.nv;
            row[j] = s.at(i, j) * std::exp(-I * PI * (double)qp.N() * u * v);
        }
        fft_inplace(row, FFTW_FORWARD);  // row[k] = sum_j g_j e^{-2pi i jk/nv}
        for (int k = 0; k < s.nv; ++k) md.c[(size_t)k * s.nu + i] = row[k] / (double)s.nv;
    }
    return md;
}

TorusSection unstrip_modes(const Modes& md, const QuantParams& qp) {
    TorusSection s;
    s.nu = md.nu;
    s.nv = md.nv;
    s.vals.assign((size_t)md.nu * md.nv, 0.0);
    std::vector<cplx> row(md.nv);
    for (int i = 0; i < md.nu; ++i) {
        for (int k = 0; k < md.nv; ++k) row[k] = md.c[(size_t)k * md.nu + i];
        fft_inplace(row, FFTW_BACKWARD);  // g_j = sum_k c_k e^{+2pi i jk/nv}
        double u = (double)i / md.nu;
        for (int j = 0; j < md.nv; ++j) {
            double v = (double)j / md.nv;
            s.at(i, j) = row[j] * std::exp(I * PI * (double)qp.N() * u * v);
        }
    }
    return s;
}

int mode_value(int k, int nv) { return k < nv / 2 ? k : k - nv; }

// Cutoff for spectral data that is about to meet an exponentially amplifying
// multiplier: the top-octave median estimates the numerical noise plateau
// (roundoff and truncation seams); everything below it is not signal.
double noise_cutoff(const std::vector<cplx>& spec,
                    const std::function<int(size_t)>& absfreq, int maxfreq) {
    double mx = 0;
    std::vector<double> top;
    for (size_t k = 0; k < spec.size(); ++k) {
        double a = std::abs(spec[k]);
        mx = std::max(mx, a);
        if (absfreq(k) >= (int)(0.8 * maxfreq)) top.push_back(a);
    }
    double plateau = 0;
    if (!top.empty()) {
        std::nth_element(top.begin(), top.begin() + top.size() / 2, top.end());
        plateau = top[top.size() / 2];
    }
    // keep the floor just above roundoff: the amplified value at the signal
    // crossing shrinks the lower the cut, until stored values are pure noise
    return std::max(2e-14 * mx, 30.0 * plateau);
}

}  // namespace

double section_max(const TorusSection& s) {
    double m = 0;
    for (auto& z : s.vals) m = std::max(m, std::abs(z));
    return m;
}

double section_norm(const TorusSection& s) {
    double acc = 0;
    for (auto& z : s.vals) acc += std::norm(z);
    return std::sqrt(acc / ((double)s.nu * s.nv));
}

double max_diff(const TorusSection& a, const TorusSection& b) {
    double m = 0;
    for (size_t i = 0; i < a.vals.size(); ++i)
        m = std::max(m, std::abs(a.vals[i] - b.vals[i]));
    return m;
}

TorusSection torus_operator_apply(TorusOp op, const TorusSection& s, const QuantParams& qp) {
    const int N = qp.N();
    if (op == TorusOp::mult_e2piu || op == TorusOp::mult_e2piv) {
        TorusSection out = s;
        for (int i = 0; i < s.nu; ++i)
            for (int j = 0; j < s.nv; ++j) {
                double w = op == TorusOp::mult_e2piu ? (double)i / s.nu : (double)j / s.nv;
                out.at(i, j) *= std::exp(2.0 * PI * I * w);
            }
        return out;
    }
    if (op == TorusOp::mhat)
        return torus_operator_apply(
            TorusOp::mult_e2piu,
            [&] {  // exp(alpha grad_v): diagonal on modes
                Modes md = strip_modes(s, qp);
                cplx al = qp.alpha();
                int nu = md.nu, nv = md.nv;
                double thresh = noise_cutoff(
                    md.c, [&](size_t idx) { return std::abs(mode_value((int)(idx / nu), nv)); },
                    nv / 2);
                for (int k = 0; k < nv; ++k) {
                    int m = mode_value(k, nv);
                    for (int i = 0; i < nu; ++i) {
                        cplx& z = md.c[(size_t)k * nu + i];
                        if (std::abs(z) <= thresh) {
                            z = 0;
                            continue;
                        }
                        double u = (double)i / nu;
                        z *= std::exp(2.0 * PI * I * al * ((double)N * u + (double)m));
                    }
                }
                return unstrip_modes(md, qp);
            }(),
            qp);
    if (op == TorusOp::grad_v) {
        Modes md = strip_modes(s, qp);
        for (int k = 0; k < md.nv; ++k) {
            int m = mode_value(k, md.nv);
            for (int i = 0; i < md.nu; ++i) {
                double u = (double)i / md.nu;
                md.c[(size_t)k * md.nu + i] *= 2.0 * PI * I * (N * u + (double)m);
            }
        }
        return unstrip_modes(md, qp);
    }
    // grad_u and lhat act through the big-line picture
    Modes md = strip_modes(s, qp);
    const int nu = md.nu, nv = md.nv;
    if (nv % N != 0) throw std::domain_error("grid nv must be divisible by N");
    const int rows_per_class = nv / N;
    Modes md_out = md;
    for (int cls = 0; cls < N; ++cls) {
        // collect modes m == cls (mod N) sorted ascending in m
        std::vector<int> ks;
        for (int k = 0; k < nv; ++k)
            if (((mode_value(k, nv) % N) + N) % N == cls) ks.push_back(k);
        std::sort(ks.begin(), ks.end(), [&](int a, int b) {
            return mode_value(a, nv) < mode_value(b, nv);
        });
        std::vector<cplx> H((size_t)rows_per_class * nu);
        for (int r = 0; r < rows_per_class; ++r)
            for (int i = 0; i < nu; ++i)
                H[(size_t)r * nu + i] = md.c[(size_t)ks[r] * nu + i];
        fft_inplace(H, FFTW_FORWARD);
        size_t n = H.size();
        // the glued class line is uniform in u with c_m(u+1) = c_{m+N}(u);
        // frequencies are cycles per unit u
        double L = (double)rows_per_class;
        double thresh = op == TorusOp::lhat
                            ? noise_cutoff(H,
                                           [&](size_t k) {
                                               long kk = k < n / 2 ? (long)k : (long)k - (long)n;
                                               return (int)(std::abs((double)kk) / L);
                                           },
                                           (int)(n / (2 * L)))
                            : 0.0;
        for (size_t k = 0; k < n; ++k) {
            double kk = k < n / 2 ? (double)k : (double)k - (double)n;
            double xi = kk / L;  // frequency in u
            cplx& z = H[k];
            if (op == TorusOp::lhat && std::abs(z) <= thresh) {
                z = 0;
                continue;
            }
            if (op == TorusOp::grad_u)
                z *= 2.0 * PI * I * xi;
            else  // lhat's translation part: u -> u - alpha
                z *= std::exp(-2.0 * PI * I * xi * qp.alpha());
        }
        fft_inplace(H, FFTW_BACKWARD);
        for (auto& z : H) z /= (double)n;
        for (int r = 0; r < rows_per_class; ++r)
            for (int i = 0; i < nu; ++i)
                md_out.c[(size_t)ks[r] * nu + i] = H[(size_t)r * nu + i];
    }
    TorusSection shifted = unstrip_modes(md_out, qp);
    if (op == TorusOp::grad_u) return shifted;
    return torus_operator_apply(TorusOp::mult_e2piv, shifted, qp);
}

WgzReport verify_an_correspondence(const QuantParams& qp, int grid, int truncation) {
    WgzReport rep;
    const int N = qp.N();
    const double sqrtN = std::sqrt((double)N);
    const cplx b = qp.b();

    std::vector<GaussianAN> family;
    {
        GaussianAN g1;
        g1.amp.assign(N, 1.0);
        g1.mu = 0.0;
        g1.c = 0.0;
        family.push_back(g1);
        GaussianAN g2 = g1;
        g2.mu = cplx(0.3, 0.1);
        g2.c = cplx(0.2, -0.4);
        family.push_back(g2);
        GaussianAN g3 = g1;
        g3.mu = cplx(-0.5, 0.0);
        g3.c = cplx(0.0, 0.7);
        for (int n = 0; n < N; ++n) g3.amp[n] = std::exp(2.0 * PI * I * (double)n / (2.0 * N));
        family.push_back(g3);
        GaussianAN g4 = g1;
        g4.mu = cplx(0.1, -0.2);
        g4.c = cplx(-0.3, 0.15);
        family.push_back(g4);
        GaussianAN g5 = g1;
        g5.mu = 0.7;
        g5.c = cplx(0.5, 0.0);
        family.push_back(g5);
    }
    rep.family_size = (int)family.size();
    rep.q_formula_diff = std::abs(qp.q_via_b() - qp.q_via_t());

    for (auto& g : family) {
        ANFunction f = g.fn();
        TorusSection s = wgz_forward(f, truncation, grid, grid, qp);
        double peak = section_max(s);

        // lemma relations
        ANFunction fprime = [&](cplx x, int n) {
            return sqrtN * (-2.0 * PI * (x - g.mu) + g.c) * g.fn()(x, n);
        };
        TorusSection lhs = torus_operator_apply(TorusOp::grad_u, s, qp);
        TorusSection rhs = wgz_forward(fprime, truncation, grid, grid, qp);
        rep.grad_u_residual = std::max(rep.grad_u_residual, max_diff(lhs, rhs) / peak);

        ANFunction xf = [&](cplx x, int n) { return 2.0 * PI * I * sqrtN * x * f(x, n); };
        lhs = torus_operator_apply(TorusOp::grad_v, s, qp);
        rhs = wgz_forward(xf, truncation, grid, grid, qp);
        rep.grad_v_residual = std::max(rep.grad_v_residual, max_diff(lhs, rhs) / peak);

        ANFunction expf = [&](cplx x, int n) {
            return std::exp(2.0 * PI * I * x / sqrtN) *
                   std::exp(2.0 * PI * I * (double)(((n % N) + N) % N) / (double)N) * f(x, n);
        };
        lhs = torus_operator_apply(TorusOp::mult_e2piu, s, qp);
        rhs = wgz_forward(expf, truncation, grid, grid, qp);
        rep.mult_u_residual = std::max(rep.mult_u_residual, max_diff(lhs, rhs) / peak);

        ANFunction shf = [&](cplx x, int n) { return f(x - 1.0 / sqrtN, n + 1); };
        lhs = torus_operator_apply(TorusOp::mult_e2piv, s, qp);
        rhs = wgz_forward(shf, truncation, grid, grid, qp);
        rep.mult_v_residual = std::max(rep.mult_v_residual, max_diff(lhs, rhs) / peak);

        // operator correspondence
        ANFunction mf = [&](cplx x, int n) {
            return std::exp(-2.0 * PI * b * x / sqrtN) *
                   std::exp(2.0 * PI * I * (double)(((n % N) + N) % N) / (double)N) * f(x, n);
        };
        lhs = torus_operator_apply(TorusOp::mhat, s, qp);
        rhs = wgz_forward(mf, truncation, grid, grid, qp);
        rep.mhat_residual = std::max(rep.mhat_residual, max_diff(lhs, rhs) / peak);

        ANFunction lf = [&](cplx x, int n) { return f(x - I * b / sqrtN, n + 1); };
        lhs = torus_operator_apply(TorusOp::lhat, s, qp);
        rhs = wgz_forward(lf, truncation, grid, grid, qp);
        rep.lhat_residual = std::max(rep.lhat_residual, max_diff(lhs, rhs) / peak);

        // q-commutation on the torus side
        TorusSection lm = torus_operator_apply(
            TorusOp::lhat, torus_operator_apply(TorusOp::mhat, s, qp), qp);
        TorusSection ml = torus_operator_apply(
            TorusOp::mhat, torus_operator_apply(TorusOp::lhat, s, qp), qp);
        cplx q = qp.q_via_t();
        double cres = 0;
        for (size_t i = 0; i < lm.vals.size(); ++i)
            cres = std::max(cres, std::abs(lm.vals[i] - q * ml.vals[i]));
        rep.commutator_residual = std::max(rep.commutator_residual, cres / section_norm(s));

        // isometry
        double lhsn = section_norm(s);
        double rhsn = std::sqrt(g.l2_norm_sq(N));
        rep.isometry_residual =
            std::max(rep.isometry_residual, std::abs(lhsn - rhsn) / rhsn);

        // quasi-periodicity at the seams via the defining sum
        for (int j = 0; j < grid; j += grid / 8) {
            double v = (double)j / grid;
            auto eval = [&](double u, double vv) {
                cplx acc = 0;
                for (int m = -truncation; m <= truncation; ++m)
                    acc += f(sqrtN * u + m / sqrtN, -m) *
                           std::exp(2.0 * PI * I * (double)m * vv);
                return std::exp(I * PI * (double)N * u * vv) * acc;
            };
            double d1 = std::abs(eval(1.0, v) - std::exp(-I * PI * (double)N * v) * eval(0.0, v));
            double d2 = std::abs(eval(0.25, 1.0) - std::exp(I * PI * (double)N * 0.25) * eval(0.25, 0.0));
            rep.quasi_periodicity = std::max({rep.quasi_periodicity, d1 / peak, d2 / peak});
        }
    }
    return rep;
}

}  // namespace ajpoly
