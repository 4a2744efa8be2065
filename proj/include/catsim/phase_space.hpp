#pragma once

#include <utility>

#include "catsim/gaussian_dynamics.hpp"
#include "catsim/types.hpp"

namespace catsim {

struct PhasePoint {
    double q;
    double p;
};

/// One-dimensional Gaussian probability density.
struct Gaussian {
    double center;
    double var;
    double operator()(double x) const {
        return std::exp(-(x - center) * (x - center) / (2.0 * var)) /
               std::sqrt(2.0 * kPi * var);
    }
};

/// Full parameter set of a single-mode cat Wigner function, in the frame
/// where the two coherent peaks lie on the Q axis (identity frame for
/// mode S, quadratures rotated by 90 degrees for mode E).
struct CatWignerParams {
    double xi0;
    CatSign sign;
    double xi;          // peak centers at +/- xi
    double mu;          // fringe displacement entering cos(mu P / var_p)
    double var_q;       // peak-direction variance
    double var_p;       // fringe-direction variance
    double norm;        // N_+- (2 for a dephased mixture)
    double o_factor;    // exp(-xi^2 / (2 var_q)), weight of the cosh term
    double r_factor;    // exp(-2 xi0^2) exp(mu^2 / (2 var_p)), fringe weight
    double d_factor;    // exp(-2 xi0^2) / o_factor

    static CatWignerParams from_mode(const ModeParams& mp, double xi0, CatSign sign);

    /// Equal statistical mixture of |xi0> and |-xi0> (interference removed).
    static CatWignerParams dephased_mixture(double xi0);

    double gamma_q(double q) const { return Gaussian{0.0, var_q}(q); }
    double gamma_p(double p) const { return Gaussian{0.0, var_p}(p); }
};

/// W(Q, P), normalized so the double integral is 1 (vacuum origin value 2/pi).
double wigner(const CatWignerParams& cp, PhasePoint pt);

/// Coordinate-representation density matrix rho(Q, Q').
double rho_coordinate(const CatWignerParams& cp, double q, double qp);

/// Marginal of the fringe quadrature, p(P) = (2/N) Gamma(P) [1 +/- R cos(mu P / var_p)].
double marginal_p(const CatWignerParams& cp, double p);

/// Marginal of the peak quadrature (two displaced Gaussians plus the vacuum-noise term).
double marginal_q(const CatWignerParams& cp, double q);

/// The two Gaussian peak components of the Q marginal (left, right).
std::pair<Gaussian, Gaussian> peak_distributions(const CatWignerParams& cp);

/// pi * Int W_a W_b dQ dP in closed form; purity for a == b, fidelity for b
/// evolved from a.  Both templates must share xi0 and cat sign.
double wigner_overlap(const CatWignerParams& a, const CatWignerParams& b);

/// Scan result for the minimum of W along the Q = 0 line.
struct LineMinimum {
    double value;       // min over P of W(0, P)
    double p_at_min;
    bool has_fringe;    // false when mu ~ 0 and the interference term is flat
};

/// Direct minimization of W(0, P); the analytic candidate P = pi var_p / mu
/// is refined by a local scan.
LineMinimum minimize_wigner_on_q_axis(const CatWignerParams& cp);

/// Phase-space point of maximal negativity for the even cat, (0, pi var_p / mu).
/// Returns has_fringe = false instead of dividing by zero when mu ~ 0.
struct NegativityPoint {
    PhasePoint pt;
    bool has_fringe;
};
NegativityPoint maximal_negativity_point(const CatWignerParams& cp);

}  // namespace catsim
