#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace catsim {

inline constexpr double kPi = 3.14159265358979323846;

enum class Mode { S, E };
enum class CatSign { Plus, Minus };

inline double sign_factor(CatSign s) { return s == CatSign::Plus ? 1.0 : -1.0; }
inline const char* mode_name(Mode m) { return m == Mode::S ? "S" : "E"; }

/// Normalization of (|xi> ± |-xi>)/sqrt(N).
inline double cat_norm(double xi0, CatSign sign) {
    return 2.0 * (1.0 + sign_factor(sign) * std::exp(-2.0 * xi0 * xi0));
}

struct ExperimentConfig {
    double xi0 = 2.0;      // coherent amplitude xi(0), >= 0
    double r = 0.0;        // squeezing of the environment mode (signed)
    double kappa = 1.0;    // coupling rate, > 0
    double gamma_s = 0.0;  // amplitude damping rate of mode S, >= 0
    double gamma_e = 0.0;  // amplitude damping rate of mode E, >= 0
    double n_s = 0.0;      // thermal occupation of the S reservoir, >= 0
    double n_e = 0.0;      // thermal occupation of the E reservoir, >= 0
    CatSign sign = CatSign::Plus;

    void validate() const {
        if (!(xi0 >= 0.0)) throw std::invalid_argument("xi0 must be >= 0");
        if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
        if (!(gamma_s >= 0.0) || !(gamma_e >= 0.0))
            throw std::invalid_argument("damping rates must be >= 0");
        if (!(n_s >= 0.0) || !(n_e >= 0.0))
            throw std::invalid_argument("thermal occupations must be >= 0");
        if (2.0 * kappa <= std::abs(gamma_e - gamma_s))
            throw std::domain_error("overdamped regime unsupported (2*kappa <= |gamma_e - gamma_s|)");
    }
};

/// Rate combinations entering the damped two-mode evolution.
struct DerivedRates {
    double gamma_plus;   // gamma_s + gamma_e
    double gamma_minus;  // gamma_e - gamma_s
    double lambda;       // sqrt(4 kappa^2 - gamma_minus^2), real in the underdamped regime
    double eta_s;        // gamma_s (n_s + 1/2)
    double eta_e;        // gamma_e (n_e + 1/2)
};

inline DerivedRates derived_rates(const ExperimentConfig& cfg) {
    cfg.validate();
    DerivedRates d;
    d.gamma_plus = cfg.gamma_s + cfg.gamma_e;
    d.gamma_minus = cfg.gamma_e - cfg.gamma_s;
    d.lambda = std::sqrt(4.0 * cfg.kappa * cfg.kappa - d.gamma_minus * d.gamma_minus);
    d.eta_s = cfg.gamma_s * (cfg.n_s + 0.5);
    d.eta_e = cfg.gamma_e * (cfg.n_e + 0.5);
    return d;
}

/// t = G / kappa for the dimensionless coupling time G = kappa t.
inline double rescaled_time(double g, double kappa = 1.0) {
    if (g < 0.0) throw std::invalid_argument("G must be >= 0");
    return g / kappa;
}

}  // namespace catsim
