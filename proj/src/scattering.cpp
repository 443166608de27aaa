#include "besselwell/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "besselwell/rootfind.hpp"
#include "besselwell/specfun.hpp"

namespace besselwell {

namespace sf = specfun;

namespace {

constexpr double kPi = std::numbers::pi;

void fill_rt(ScatteringResult& r) {
    const auto [refl, trans] = reflection_transmission(r.A, r.B);
    r.R = refl;
    r.T = trans;
}

}  // namespace

std::pair<double, double> reflection_transmission(Complex A, Complex B) {
    const double a2 = std::norm(A);
    if (a2 < 1e-24) throw PoleError("reflection_transmission: |A| < 1e-12 (amplitude pole)");
    return {std::norm(B) / a2, 1.0 / a2};
}

ScatteringResult amplitudes_v4(double energy, double v0, double a) {
    if (!(energy > 0.0) || !(energy < v0))
        throw RegimeError("amplitudes_v4 requires 0 < E < V0");
    const WaveParams wp = wave_params({Family::V4, v0, a}, energy);
    const Complex h1 = sf::hankel(1, wp.nu, wp.z0);
    const Complex h1p = sf::hankel(1, wp.nu, wp.z0, true);
    const Complex h2 = std::conj(h1);
    const Complex h2p = std::conj(h1p);
    const Complex iu(0.0, 1.0);
    ScatteringResult r{};
    r.energy = energy;
    r.A = -iu * (kPi * wp.z0 / 2.0) * h1 * h1p;
    r.B = iu * (kPi * wp.z0 / 4.0) * (h1 * h2p + h2 * h1p);
    fill_rt(r);
    return r;
}

ScatteringResult amplitudes_v2(double energy, double v0, double a) {
    if (!(energy > 0.0)) throw RegimeError("amplitudes_v2 requires E > 0");
    const WaveParams wp = wave_params({Family::V2, v0, a}, energy);
    const Complex iv = sf::bessel_i_imag(wp.nu, wp.z0);
    const Complex ivp = sf::bessel_i_imag(wp.nu, wp.z0, true);
    const Complex ic = std::conj(iv);    // I_{-i nu}
    const Complex icp = std::conj(ivp);  // I'_{-i nu}
    const double s = std::sinh(kPi * wp.nu);
    const Complex iu(0.0, 1.0);
    ScatteringResult r{};
    r.energy = energy;
    r.A = iu * (kPi * wp.z0 / s) * ic * icp;
    r.B = -iu * (kPi * wp.z0 / (2.0 * s)) * (iv * icp + ic * ivp);
    fill_rt(r);
    return r;
}

TransferMatrix transfer_matrix(const ScatteringResult& r) {
    TransferMatrix m{};
    m.m22 = r.A;
    m.m21 = -r.B;
    m.m11 = std::conj(m.m22);
    m.m12 = std::conj(m.m21);
    return m;
}

double probability_flux(double nu, double a, Complex amplitude, double z_eval) {
    if (!(a > 0.0)) throw std::invalid_argument("probability_flux requires a > 0");
    const double z = (z_eval > 0.0) ? z_eval : std::max(2.0, std::abs(nu) + 3.0);
    const Complex h1 = sf::hankel(1, nu, z);
    const Complex h1p = sf::hankel(1, nu, z, true);
    // F = Im(psi* dpsi/dx) with psi = amp H1(z), d/dx = (z/a) d/dz
    return std::norm(amplitude) * (z / a) * std::imag(std::conj(h1) * h1p);
}

namespace scattering_detail {

double k_imag_from_i_series(double nu, double x, bool derivative) {
    // K_nu = pi (I_{-nu} - I_nu) / (2 sin(pi nu)) continued to nu -> i nu
    const Complex iv = sf::bessel_i_imag(nu, x, derivative);
    return -kPi * iv.imag() / std::sinh(kPi * nu);
}

}  // namespace scattering_detail

std::vector<EnergyLevel> find_poles(Family family, double v0, double a, bool sign_flipped,
                                    double e_lo, double e_hi, int n_max) {
    if (family != Family::V4 && family != Family::V2)
        throw std::invalid_argument("find_poles supports the V4 and V2 amplitudes");
    if (!(v0 > 0.0) || !(a > 0.0)) throw std::invalid_argument("requires V0 > 0, a > 0");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");

    if (!sign_flipped) {
        // diagnostic scan of |A| on the physical axis
        auto ampl = [&](double e) {
            return family == Family::V4 ? amplitudes_v4(e, v0, a) : amplitudes_v2(e, v0, a);
        };
        if (e_hi <= e_lo) {
            e_lo = (family == Family::V4) ? 1e-6 * v0 : 1e-6 * v0;
            e_hi = (family == Family::V4) ? v0 * (1.0 - 1e-6) : 8.0 * v0;
        }
        std::vector<EnergyLevel> out;
        for (double e : linspace(e_lo, e_hi, 2000)) {
            const ScatteringResult r = ampl(e);
            if (std::abs(r.A) < 1e-12) {
                EnergyLevel lvl{};
                lvl.energy = e;
                lvl.parity = Parity::Even;
                lvl.condition = Condition::JPrimeZero;
                lvl.residual = std::abs(r.A);
                lvl.bracket_lo = lvl.bracket_hi = e;
                out.push_back(lvl);
                if (int(out.size()) >= n_max) break;
            }
        }
        return out;
    }

    std::vector<EnergyLevel> merged;
    if (family == Family::V4) {
        // flipped V4: A ~ K_{i kappa a}(qa) K'_{i kappa a}(qa), kappa = sqrt(E + V0)
        const double z0 = std::sqrt(v0) * a;
        if (e_hi <= e_lo) {
            e_lo = 0.0;
            e_hi = spectra_detail::default_valley_ceiling(v0, a);
        }
        for (const bool even : {true, false}) {
            auto f = [=](double e) {
                return scattering_detail::k_imag_from_i_series(std::sqrt(e + v0) * a, z0, even);
            };
            // nu-stepped nodes, same oscillation logic as the valley scan
            const double nu_lo = std::sqrt(std::max(e_lo, 0.0) + v0) * a * (1.0 + 1e-12);
            const double nu_hi = std::sqrt(e_hi + v0) * a;
            const double dnu = std::min(0.02, (nu_hi - nu_lo) / 64.0);
            std::vector<double> nodes;
            for (double nu = nu_lo; nu < nu_hi; nu += dnu)
                nodes.push_back(nu * nu / (a * a) - v0);
            nodes.push_back(e_hi);
            for (const Bracket& b : scan_sign_changes(f, nodes)) {
                const double e = bisect(f, b);
                if (e <= 0.0) continue;  // poles correspond to E > 0 bound states
                EnergyLevel lvl{};
                lvl.energy = e;
                lvl.parity = even ? Parity::Even : Parity::Odd;
                lvl.condition = even ? Condition::KPrimeZero : Condition::KZero;
                lvl.residual = std::abs(f(e));
                lvl.bracket_lo = b.lo;
                lvl.bracket_hi = b.hi;
                merged.push_back(lvl);
            }
        }
    } else {
        // flipped V2: A ~ J_{kappa a}(qa) J'_{kappa a}(qa), kappa = sqrt(V0 - E)
        if (e_hi <= e_lo) {
            e_lo = v0 * 1e-12;
            e_hi = v0 * (1.0 - 1e-12);
        }
        e_lo = std::max(e_lo, v0 * 1e-12);
        e_hi = std::min(e_hi, v0 * (1.0 - 1e-12));
        for (const bool even : {true, false}) {
            auto f = [=](double e) {
                return sf::bessel_j(std::sqrt(v0 - e) * a, std::sqrt(v0) * a, even);
            };
            for (const Bracket& b : scan_sign_changes(f, linspace(e_lo, e_hi, 2000))) {
                const double e = bisect(f, b);
                EnergyLevel lvl{};
                lvl.energy = e;
                lvl.parity = even ? Parity::Even : Parity::Odd;
                lvl.condition = even ? Condition::JPrimeZero : Condition::JZero;
                lvl.residual = std::abs(f(e));
                lvl.bracket_lo = b.lo;
                lvl.bracket_hi = b.hi;
                merged.push_back(lvl);
            }
        }
    }
    std::sort(merged.begin(), merged.end(),
              [](const EnergyLevel& x, const EnergyLevel& y) { return x.energy < y.energy; });
    if (int(merged.size()) > n_max) merged.resize(n_max);
    return merged;
}

}  // namespace besselwell
