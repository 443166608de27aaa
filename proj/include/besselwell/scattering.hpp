#pragma once

#include <complex>
#include <vector>

#include "besselwell/potentials.hpp"
#include "besselwell/spectra.hpp"

namespace besselwell {

using Complex = std::complex<double>;

/// Left-incidence amplitudes with unit transmitted amplitude:
/// T = |1/A|^2, R = |B/A|^2, and |A|^2 - |B|^2 = 1 by flux conservation.
struct ScatteringResult {
    double energy;
    Complex A;  // incoming coefficient
    Complex B;  // reflected coefficient
    double R;
    double T;
};

/// 2x2 transfer matrix with m22 = A, m21 = -B, m11 = conj(m22), m12 = conj(m21).
struct TransferMatrix {
    Complex m11, m12, m21, m22;
};

/// V4 = V0 (1 - e^{2|x|/a}) amplitudes for 0 < E < V0:
///   A = -(i pi z0/2) H1 H1',  B = (i pi z0/4)(H1 H2' + H2 H1'),
/// H_r = H^(r)_nu(z0), nu = kappa a, z0 = q a. B is purely imaginary; at the
/// special energies B - A = +1 (J_nu(z0) = 0) or -1 (J'_nu(z0) = 0).
ScatteringResult amplitudes_v4(double energy, double v0, double a);

/// V2 = V0 (e^{-2|x|/a} - 1) amplitudes for E > 0, from matching
/// I_{+-i kappa a} travelling waves at the origin:
///   A =  (i pi z0 / sinh(pi nu)) I_{-i nu}(z0) I'_{-i nu}(z0),
///   B = -(i pi z0 / (2 sinh(pi nu))) (I_{i nu}(z0) I'_{-i nu}(z0) + I_{-i nu}(z0) I'_{i nu}(z0)),
/// nu = kappa a, kappa = sqrt(E + V0), z0 = q a. Unitary by the
/// I_{+-i nu} Wronskian; zeros of A sit where I_{-i nu} I'_{-i nu} = 0.
ScatteringResult amplitudes_v2(double energy, double v0, double a);

/// R = |B/A|^2, T = |1/A|^2. Throws PoleError when |A| < 1e-12.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};
std::pair<double, double> reflection_transmission(Complex A, Complex B);

TransferMatrix transfer_matrix(const ScatteringResult& r);

/// Flux of the wave amplitude * H^(1)_nu(z(x)); equals |amplitude|^2 * 2/(pi a)
/// independent of the evaluation point. z_eval <= 0 picks a default point.
double probability_flux(double nu, double a, Complex amplitude, double z_eval = 0.0);

/// Energies where A -> 0 after the sign flip V0 -> -V0 (q -> iq, kappa -> i kappa).
/// V4: A ~ K_{i kappa a}(qa) K'_{i kappa a}(qa) with kappa = sqrt(E + V0); the
/// K here is evaluated through the rotated-argument route, i.e. from the
/// ascending I_{i nu} series via K_{i nu} = -pi Im I_{i nu} / sinh(pi nu) --
/// an implementation path independent of the quadrature used by the spectra
/// module, so that the pole/bound-state match is a genuine cross-check.
/// V2: A ~ J_{kappa a}(qa) J'_{kappa a}(qa) with kappa = sqrt(V0 - E), E < V0.
/// With sign_flipped = false this scans |A| for near-zeros instead
/// (diagnostic; |A| >= 1 on the real axis, so the list comes back empty).
/// e_hi <= 0 picks the family default range.
std::vector<EnergyLevel> find_poles(Family family, double v0, double a, bool sign_flipped,
                                    double e_lo, double e_hi, int n_max);

namespace scattering_detail {
// K_{i nu}(x) and its x-derivative from the I_{i nu} ascending series.
double k_imag_from_i_series(double nu, double x, bool derivative);
}  // namespace scattering_detail

}  // namespace besselwell
