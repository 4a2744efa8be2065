#include "catsim/gaussian_dynamics.hpp"

#include <cmath>

namespace catsim {

namespace {

struct Propagator {
    double env;            // exp(-gamma_plus t / 2)
    double f_plus, f_minus, g;  // lambda cos(..) +/- gamma_minus sin(..), 2 kappa sin(..)
    double lambda;
};

Propagator propagator(const DerivedRates& d, const ExperimentConfig& cfg, double t) {
    Propagator p;
    p.lambda = d.lambda;
    p.env = std::exp(-0.5 * d.gamma_plus * t);
    const double half = 0.5 * d.lambda * t;
    const double c = std::cos(half), s = std::sin(half);
    p.f_plus = d.lambda * c + d.gamma_minus * s;
    p.f_minus = d.lambda * c - d.gamma_minus * s;
    p.g = 2.0 * cfg.kappa * s;
    return p;
}

}  // namespace

NoiseTerms noise_terms(const ExperimentConfig& cfg, double t) {
    const DerivedRates d = derived_rates(cfg);
    const double gp = d.gamma_plus, lam = d.lambda;
    double i0, ic, is;
    if (gp == 0.0) {
        i0 = t;
        ic = std::sin(lam * t) / lam;
        is = (1.0 - std::cos(lam * t)) / lam;
    } else {
        const double den = gp * gp + lam * lam;
        const double e = std::exp(-gp * t);
        i0 = (1.0 - e) / gp;
        ic = (gp - e * (gp * std::cos(lam * t) - lam * std::sin(lam * t))) / den;
        is = (lam - e * (lam * std::cos(lam * t) + gp * std::sin(lam * t))) / den;
    }
    // f_pm^2 = 2k^2 + (2k^2 - gm^2) cos(lam tau) +/- lam gm sin(lam tau),
    // g^2 = 2k^2 (1 - cos(lam tau)); integrate exp(-gp tau) times each.
    const double k2 = cfg.kappa * cfg.kappa;
    const double gm = d.gamma_minus;
    const double l2 = lam * lam;
    NoiseTerms f;
    f.f_s = (2.0 * k2 * (d.eta_s + d.eta_e) * i0 +
             ((2.0 * k2 - gm * gm) * d.eta_s - 2.0 * k2 * d.eta_e) * ic +
             lam * gm * d.eta_s * is) / l2;
    f.f_e = (2.0 * k2 * (d.eta_s + d.eta_e) * i0 +
             ((2.0 * k2 - gm * gm) * d.eta_e - 2.0 * k2 * d.eta_s) * ic -
             lam * gm * d.eta_e * is) / l2;
    return f;
}

ModePair evolve(const ExperimentConfig& cfg, double t) {
    if (t < 0.0) throw std::invalid_argument("time must be >= 0");
    const DerivedRates d = derived_rates(cfg);
    const Propagator p = propagator(d, cfg, t);
    const NoiseTerms f = noise_terms(cfg, t);

    const double vq_s0 = 0.25, vp_s0 = 0.25;
    const double vq_e0 = 0.25 * std::exp(-2.0 * cfg.r);
    const double vp_e0 = 0.25 * std::exp(2.0 * cfg.r);

    const double e2l2 = p.env * p.env / (p.lambda * p.lambda);
    const double fp2 = p.f_plus * p.f_plus;
    const double fm2 = p.f_minus * p.f_minus;
    const double g2 = p.g * p.g;

    ModePair out;
    out.s.mode = Mode::S;
    out.s.xi = (p.env / p.lambda) * p.f_plus * cfg.xi0;
    out.s.mu = out.s.xi;
    out.s.var_q = e2l2 * (fp2 * vq_s0 + g2 * vp_e0) + f.f_s;
    out.s.var_p = e2l2 * (fp2 * vp_s0 + g2 * vq_e0) + f.f_s;

    out.e.mode = Mode::E;
    out.e.xi = (p.env / p.lambda) * p.g * cfg.xi0;
    out.e.mu = -out.e.xi;
    out.e.var_q = e2l2 * (fm2 * vq_e0 + g2 * vp_s0) + f.f_e;
    out.e.var_p = e2l2 * (fm2 * vp_e0 + g2 * vq_s0) + f.f_e;
    return out;
}

}  // namespace catsim
