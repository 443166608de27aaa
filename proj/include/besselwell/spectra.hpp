#pragma once

#include <string>
#include <vector>

#include "besselwell/potentials.hpp"

namespace besselwell {

enum class Parity { Even, Odd };

enum class Condition {
    JPrimeZero,     // J'_{kappa a}(qa) = 0   (even, well family)
    JZero,          // J_{kappa a}(qa) = 0    (odd, well family)
    KPrimeZero,     // K'_{i kappa a}(qa) = 0 (even, valley family)
    KZero,          // K_{i kappa a}(qa) = 0  (odd, valley family)
    JNegPrimeZero,  // J'_{-kappa a}(qa) = 0  (even, no physical role)
    JNegZero,       // J_{-kappa a}(qa) = 0   (odd, no physical role)
    ShootDPsiZero,  // psi'(0) = 0 from the shooting integrator
    ShootPsiZero,   // psi(0) = 0 from the shooting integrator
};

struct EnergyLevel {
    double energy;
    Parity parity;
    Condition condition;
    double residual;     // |condition function| at the refined root
    double bracket_lo;   // scan cell that contained the root
    double bracket_hi;
};

struct WavefunctionGrid {
    std::vector<double> xs;   // uniform
    std::vector<double> psi;
    Parity parity;
    bool normalized = false;        // trapezoid L2 norm == 1 on this grid
    bool sign_flip_at_origin = false;
};

std::string parity_name(Parity p);
std::string condition_name(Condition c);

/// Energies E in (0, V0) with kappa = sqrt(V0 - E) solving J'_{kappa a}(qa)=0
/// (even) or J_{kappa a}(qa)=0 (odd). Simultaneously the V4 special
/// scattering states, the V5 bound states and the V6 hybrid states.
std::vector<EnergyLevel> special_states_well_family(double v0, double a, Parity parity,
                                                    int n_max);

/// Energies E > 0 with kappa = sqrt(E + V0) solving K'_{i kappa a}(qa)=0
/// (even) or K_{i kappa a}(qa)=0 (odd): the V2 special states and the V1
/// bound states. There are infinitely many; the scan stops at e_ceiling
/// (0 = the default V0 (1 + 20/(qa)^2) + 50/a^2). Throws if fewer than n_max
/// roots exist below the ceiling.
std::vector<EnergyLevel> special_states_valley_family(double v0, double a, Parity parity,
                                                      int n_max, double e_ceiling = 0.0,
                                                      bool allow_fewer = false);

/// Roots of the negative-order conditions J'_{-kappa a}(qa)=0 / J_{-kappa a}(qa)=0
/// in (0, V0); no physical role, reported for completeness.
std::vector<EnergyLevel> nonphysical_states(double v0, double a, Parity parity, int n_max);

/// Sampled wavefunction of `level` for the given family on a uniform grid,
/// L2-normalized with the trapezoid rule (grid-relative: a finite grid
/// truncates the tails of the V4-family states). Odd states are stored as
/// true odd functions; cosmetic_sign_flip reverses the x<0 branch instead,
/// which is the cusp-free plotted form.
WavefunctionGrid wavefunction(const PotentialSpec& spec, const EnergyLevel& level,
                              double x_min, double x_max, int n_points,
                              bool cosmetic_sign_flip = false);

namespace spectra_detail {
// Condition functions, exposed for cross-checks.
double well_condition(Condition c, double v0, double a, double energy);
double valley_condition(Condition c, double v0, double a, double energy);
double default_valley_ceiling(double v0, double a);
}  // namespace spectra_detail

}  // namespace besselwell
