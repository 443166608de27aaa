#pragma once

#include <functional>
#include <vector>

#include "besselwell/potentials.hpp"
#include "besselwell/spectra.hpp"

namespace besselwell::oracle {

enum class Matching {
    PsiZeroAtOrigin,   // psi(0) = 0
    DPsiZeroAtOrigin,  // psi'(0) = 0
};

struct ShootingProblem {
    PotentialSpec spec;
    Matching matching = Matching::DPsiZeroAtOrigin;
    double x_start = 0.0;   // decaying-side start (sign matters)
    double x_end = 0.0;     // matching point
    double grid_step = 1e-3;
};

/// Same problem with a free-form potential (used for potentials outside the
/// built-in family, e.g. the linear well cross-check).
struct ShootingProblemFn {
    std::function<double(double)> potential;
    Matching matching = Matching::DPsiZeroAtOrigin;
    double x_start = 0.0;
    double x_end = 0.0;
    double grid_step = 1e-3;
};

/// Fourth-order Numerov integration of psi'' = (V - E) psi from x_from to
/// x_to (either direction), seeded with psi0 at x_from and psi1 one step in.
/// Throws std::overflow_error when |psi| exceeds 1e300; the eigenvalue paths
/// below rescale internally instead. The returned grid is ascending in x.
WavefunctionGrid numerov_integrate(const PotentialSpec& spec, double energy, double x_from,
                                   double x_to, double step, double psi0, double psi1);
WavefunctionGrid numerov_integrate(const std::function<double(double)>& potential,
                                   double energy, double x_from, double x_to, double step,
                                   double psi0, double psi1);

/// Inward integration from the decaying side with a WKB seed, then the
/// matching functional at x_end. psi and a*psi' are normalized by the larger
/// of the two, so the returned value is scale-free and sign-meaningful.
double shooting_functional(const ShootingProblem& problem, double energy);
double shooting_functional(const ShootingProblemFn& problem, double energy);

/// Bisection on the shooting functional; requires a sign change on [e_lo, e_hi].
EnergyLevel eigen_shoot(const ShootingProblem& problem, double e_lo, double e_hi);
EnergyLevel eigen_shoot(const ShootingProblemFn& problem, double e_lo, double e_hi);

/// x_start that buries the truncation error: beyond the turning point by
/// 12 decay lengths (capped) for the outer-well families, a fixed 4a past the
/// turning point for the steep exponential wall of V1/V3.
double default_x_start(const PotentialSpec& spec, double energy);

/// Lowest n_max eigenvalues of V(x) = x^3: exponential decay for x > 0 plus
/// psi(0) = 0 or psi'(0) = 0 at the origin. x_right <= 0 picks
/// cbrt(E) + 6 per probe; x_left only bounds reconstruction, not the
/// eigenvalue. Throws when the step cannot resolve the local wavelength.
std::vector<EnergyLevel> cubic_levels(int n_max, double x_right = 0.0,
                                      double x_left = -8.0, double step = 5e-4);

/// Wavefunction for a cubic level: inward integration on the right glued to
/// an outward continuation to x_left, normalized on the assembled grid.
WavefunctionGrid cubic_wavefunction(const EnergyLevel& level, double x_right = 0.0,
                                    double x_left = -8.0, double step = 5e-4);

enum class Observable { XPower, PPower };

struct MomentResult {
    double value;
    bool resolution_warning = false;  // oscillation near the cutoff ~ grid step
    bool exact_zero = false;          // <p> for real psi: odd integrand, reported 0
};

/// <x^n> by trapezoid quadrature, <p^2> = int |psi'|^2, <p^4> = int |psi''|^2
/// (derivatives by central differences), all renormalized on |x| <= cutoff.
/// P_POWER supports power 1 (reported exactly 0), 2 and 4.
MomentResult moment(const WavefunctionGrid& psi, Observable observable, int power,
                    double cutoff);

}  // namespace besselwell::oracle
