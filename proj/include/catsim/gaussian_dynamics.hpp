#pragma once

#include "catsim/types.hpp"

namespace catsim {

/// Gaussian-kernel parameters of one mode at one time.
///
/// xi is the coherent displacement of the two cat peaks, mu the fringe
/// displacement of the interference term.  For mode S both lie along the
/// physical Q axis.  For mode E the beam splitter deposits the peaks along
/// the physical P axis; var_q/var_p are always the physical-frame
/// quadrature variances (so var_q(0) = exp(-2r)/4 for mode E), and the
/// cat-aligned peak/fringe variances are var_p/var_q respectively.
struct ModeParams {
    Mode mode;
    double xi;     // peak displacement magnitude
    double mu;     // fringe displacement (mu = xi for S, -xi for E)
    double var_q;  // physical <(dQ)^2>
    double var_p;  // physical <(dP)^2>

    double peak_var() const { return mode == Mode::S ? var_q : var_p; }
    double fringe_var() const { return mode == Mode::S ? var_p : var_q; }
};

struct ModePair {
    ModeParams s;
    ModeParams e;
};

/// Closed-form evolution of the kernel parameters under beam-splitter
/// coupling and local thermal damping.  Throws on invalid config or t < 0.
ModePair evolve(const ExperimentConfig& cfg, double t);

/// Accumulated thermal/vacuum noise terms (one per mode) at time t.
struct NoiseTerms {
    double f_s;
    double f_e;
};
NoiseTerms noise_terms(const ExperimentConfig& cfg, double t);

}  // namespace catsim
