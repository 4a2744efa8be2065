#include "catsim/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace catsim {

CatWignerParams CatWignerParams::from_mode(const ModeParams& mp, double xi0, CatSign sign) {
    CatWignerParams cp;
    cp.xi0 = xi0;
    cp.sign = sign;
    cp.xi = std::abs(mp.xi);
    cp.mu = std::abs(mp.mu);
    cp.var_q = mp.peak_var();
    cp.var_p = mp.fringe_var();
    if (!(cp.var_q > 0.0) || !(cp.var_p > 0.0))
        throw std::invalid_argument("mode variances must be positive");
    cp.norm = cat_norm(xi0, sign);
    const double e2 = std::exp(-2.0 * xi0 * xi0);
    cp.o_factor = std::exp(-cp.xi * cp.xi / (2.0 * cp.var_q));
    cp.r_factor = e2 * std::exp(cp.mu * cp.mu / (2.0 * cp.var_p));
    // R = 1 and O = exp(-2 xi0^2) exactly at t = 0; guard rounding overshoot.
    cp.r_factor = std::min(cp.r_factor, 1.0);
    cp.d_factor = e2 / cp.o_factor;
    return cp;
}

CatWignerParams CatWignerParams::dephased_mixture(double xi0) {
    CatWignerParams cp;
    cp.xi0 = xi0;
    cp.sign = CatSign::Plus;
    cp.xi = xi0;
    cp.mu = xi0;
    cp.var_q = cp.var_p = 0.25;
    cp.norm = 2.0;
    const double e2 = std::exp(-2.0 * xi0 * xi0);
    cp.o_factor = e2;
    cp.r_factor = 0.0;
    cp.d_factor = 1.0;
    return cp;
}

double wigner(const CatWignerParams& cp, PhasePoint pt) {
    const double bracket = cp.o_factor * std::cosh(cp.xi * pt.q / cp.var_q) +
                           sign_factor(cp.sign) * cp.r_factor * std::cos(cp.mu * pt.p / cp.var_p);
    return (2.0 / cp.norm) * cp.gamma_q(pt.q) * cp.gamma_p(pt.p) * bracket;
}

double rho_coordinate(const CatWignerParams& cp, double q, double qp) {
    const double qbar = 0.5 * (q + qp);
    const double delta = q - qp;
    const Gaussian gq{0.0, cp.var_q};
    const double peaks = std::exp(-2.0 * cp.var_p * delta * delta) *
                         (gq(qbar - cp.xi) + gq(qbar + cp.xi));
    double inter = 0.0;
    if (cp.r_factor > 0.0) {
        const double shift = cp.mu / (2.0 * cp.var_p);
        inter = cp.r_factor * gq(qbar) *
                (std::exp(-2.0 * cp.var_p * (delta + shift) * (delta + shift)) +
                 std::exp(-2.0 * cp.var_p * (delta - shift) * (delta - shift)));
    }
    return (peaks + sign_factor(cp.sign) * inter) / cp.norm;
}

double marginal_p(const CatWignerParams& cp, double p) {
    return (2.0 / cp.norm) * cp.gamma_p(p) *
           (1.0 + sign_factor(cp.sign) * cp.r_factor * std::cos(cp.mu * p / cp.var_p));
}

double marginal_q(const CatWignerParams& cp, double q) {
    const auto [left, right] = peak_distributions(cp);
    // Interference contribution integrated over P; equals
    // 2 exp(-2 xi0^2) Gamma(q) for a cat, 0 for a dephased mixture.
    const double vac = 2.0 * cp.r_factor * std::exp(-cp.mu * cp.mu / (2.0 * cp.var_p)) * cp.gamma_q(q);
    return (left(q) + right(q) + sign_factor(cp.sign) * vac) / cp.norm;
}

std::pair<Gaussian, Gaussian> peak_distributions(const CatWignerParams& cp) {
    return {Gaussian{-cp.xi, cp.var_q}, Gaussian{cp.xi, cp.var_q}};
}

double wigner_overlap(const CatWignerParams& a, const CatWignerParams& b) {
    const double sq = a.var_q + b.var_q;
    const double sp = a.var_p + b.var_p;
    const double vhq = a.var_q * b.var_q / sq;
    const double vhp = a.var_p * b.var_p / sp;
    const double sgn = sign_factor(a.sign);
    const double xa = a.xi / a.var_q, xb = b.xi / b.var_q;
    const double ma = a.mu / a.var_p, mb = b.mu / b.var_p;
    double k = a.o_factor * b.o_factor * 0.5 *
               (std::exp((xa + xb) * (xa + xb) * vhq / 2.0) +
                std::exp((xa - xb) * (xa - xb) * vhq / 2.0));
    k += a.r_factor * b.r_factor * 0.5 *
         (std::exp(-(ma + mb) * (ma + mb) * vhp / 2.0) +
          std::exp(-(ma - mb) * (ma - mb) * vhp / 2.0));
    k += sgn * a.o_factor * b.r_factor * std::exp(xa * xa * vhq / 2.0) * std::exp(-mb * mb * vhp / 2.0);
    k += sgn * a.r_factor * b.o_factor * std::exp(xb * xb * vhq / 2.0) * std::exp(-ma * ma * vhp / 2.0);
    return 2.0 * k / (a.norm * b.norm * std::sqrt(sq * sp));
}

NegativityPoint maximal_negativity_point(const CatWignerParams& cp) {
    NegativityPoint np;
    // With mu -> 0 the interference term is flat; there is no fringe minimum.
    const double tiny = 1e-300;
    if (std::abs(cp.mu) < tiny || cp.r_factor == 0.0) {
        np.pt = {0.0, 0.0};
        np.has_fringe = false;
        return np;
    }
    np.pt = {0.0, kPi * cp.var_p / cp.mu};
    np.has_fringe = true;
    return np;
}

LineMinimum minimize_wigner_on_q_axis(const CatWignerParams& cp) {
    LineMinimum lm;
    const NegativityPoint np = maximal_negativity_point(cp);
    lm.has_fringe = np.has_fringe;
    auto w_line = [&](double p) { return wigner(cp, {0.0, p}); };

    // Scan out to the larger of the Gaussian tail and the first fringe minimum.
    const double sigma = std::sqrt(cp.var_p);
    double span = 8.0 * sigma;
    if (np.has_fringe) span = std::max(span, 1.5 * std::abs(np.pt.p));
    const int n = 4001;
    double best = w_line(0.0), best_p = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double p = -span + 2.0 * span * i / n;
        const double v = w_line(p);
        if (v < best) { best = v; best_p = p; }
    }
    // Golden-section refinement around the grid minimum.
    double lo = best_p - 2.0 * span / n, hi = best_p + 2.0 * span / n;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = w_line(x1), f2 = w_line(x2);
    for (int it = 0; it < 120; ++it) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo); f1 = w_line(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo); f2 = w_line(x2);
        }
    }
    const double xm = 0.5 * (lo + hi), fm = w_line(xm);
    if (fm < best) { best = fm; best_p = xm; }
    lm.value = best;
    lm.p_at_min = best_p;
    return lm;
}

}  // namespace catsim
