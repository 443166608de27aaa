#include "besselwell/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "besselwell/rootfind.hpp"
#include "besselwell/specfun.hpp"

namespace besselwell {

namespace sf = specfun;

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string condition_name(Condition c) {
    switch (c) {
        case Condition::JPrimeZero: return "Jprime_zero";
        case Condition::JZero: return "J_zero";
        case Condition::KPrimeZero: return "Kprime_zero";
        case Condition::KZero: return "K_zero";
        case Condition::JNegPrimeZero: return "Jneg_prime_zero";
        case Condition::JNegZero: return "Jneg_zero";
        case Condition::ShootDPsiZero: return "shoot_dpsi_zero";
        case Condition::ShootPsiZero: return "shoot_psi_zero";
    }
    return "?";
}

namespace spectra_detail {

double well_condition(Condition c, double v0, double a, double energy) {
    const double nu = std::sqrt(std::max(0.0, v0 - energy)) * a;
    const double z0 = std::sqrt(v0) * a;
    switch (c) {
        case Condition::JPrimeZero: return sf::bessel_j(nu, z0, true);
        case Condition::JZero: return sf::bessel_j(nu, z0, false);
        case Condition::JNegPrimeZero: return sf::bessel_j(-nu, z0, true);
        case Condition::JNegZero: return sf::bessel_j(-nu, z0, false);
        default: throw std::invalid_argument("well_condition: not a well-family condition");
    }
}

double valley_condition(Condition c, double v0, double a, double energy) {
    const double nu = std::sqrt(energy + v0) * a;
    const double z0 = std::sqrt(v0) * a;
    switch (c) {
        case Condition::KPrimeZero: return sf::bessel_k_imag(nu, z0, true);
        case Condition::KZero: return sf::bessel_k_imag(nu, z0, false);
        default: throw std::invalid_argument("valley_condition: not a valley-family condition");
    }
}

double default_valley_ceiling(double v0, double a) {
    const double qa = std::sqrt(v0) * a;
    return v0 * (1.0 + 20.0 / (qa * qa)) + 50.0 / (a * a);
}

}  // namespace spectra_detail

namespace {

constexpr int kScanPoints = 2000;

std::vector<EnergyLevel> refine_brackets(const std::function<double(double)>& f,
                                         const std::vector<Bracket>& brackets,
                                         Parity parity, Condition condition, int n_max) {
    std::vector<EnergyLevel> out;
    for (const Bracket& b : brackets) {
        if (int(out.size()) >= n_max) break;
        const double e = bisect(f, b);
        EnergyLevel lvl{};
        lvl.energy = e;
        lvl.parity = parity;
        lvl.condition = condition;
        lvl.residual = std::abs(f(e));
        lvl.bracket_lo = b.lo;
        lvl.bracket_hi = b.hi;
        // drop duplicates from adjacent cells touching the same root
        if (!out.empty() &&
            std::abs(out.back().energy - e) < 1e-9 * std::max(1.0, std::abs(e)))
            continue;
        out.push_back(lvl);
    }
    return out;
}

Condition well_condition_for(Parity parity, bool nonphysical) {
    if (nonphysical)
        return parity == Parity::Even ? Condition::JNegPrimeZero : Condition::JNegZero;
    return parity == Parity::Even ? Condition::JPrimeZero : Condition::JZero;
}

std::vector<EnergyLevel> well_family_roots(double v0, double a, Parity parity, int n_max,
                                           bool nonphysical) {
    if (!(v0 > 0.0) || !(a > 0.0)) throw std::invalid_argument("requires V0 > 0, a > 0");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const Condition cond = well_condition_for(parity, nonphysical);
    auto f = [=](double e) { return spectra_detail::well_condition(cond, v0, a, e); };
    const double lo = v0 * 1e-12;
    const double hi = v0 * (1.0 - 1e-12);
    const auto brackets = scan_sign_changes(f, linspace(lo, hi, kScanPoints));
    return refine_brackets(f, brackets, parity, cond, n_max);
}

}  // namespace

std::vector<EnergyLevel> special_states_well_family(double v0, double a, Parity parity,
                                                    int n_max) {
    return well_family_roots(v0, a, parity, n_max, false);
}

std::vector<EnergyLevel> nonphysical_states(double v0, double a, Parity parity, int n_max) {
    return well_family_roots(v0, a, parity, n_max, true);
}

std::vector<EnergyLevel> special_states_valley_family(double v0, double a, Parity parity,
                                                      int n_max, double e_ceiling,
                                                      bool allow_fewer) {
    if (!(v0 > 0.0) || !(a > 0.0)) throw std::invalid_argument("requires V0 > 0, a > 0");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (e_ceiling <= 0.0) e_ceiling = spectra_detail::default_valley_ceiling(v0, a);
    const Condition cond = parity == Parity::Even ? Condition::KPrimeZero : Condition::KZero;
    auto f = [=](double e) { return spectra_detail::valley_condition(cond, v0, a, e); };

    // K_{i nu}(qa) oscillates in nu, not in E, so the scan steps in nu.
    const double qa = std::sqrt(v0) * a;
    const double nu_lo = qa * (1.0 + 1e-12);
    const double nu_hi = a * std::sqrt(e_ceiling + v0);
    if (nu_hi <= nu_lo) throw std::runtime_error("valley scan: energy ceiling below E = 0");
    const double dnu = std::min(0.02, (nu_hi - nu_lo) / 64.0);
    const int n_nodes = int(std::ceil((nu_hi - nu_lo) / dnu)) + 1;
    std::vector<double> nodes(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        const double nu = std::min(nu_hi, nu_lo + i * dnu);
        nodes[i] = (nu * nu) / (a * a) - v0;
    }
    nodes.back() = e_ceiling;
    const auto brackets = scan_sign_changes(f, nodes);
    auto out = refine_brackets(f, brackets, parity, cond, n_max);
    if (!allow_fewer && int(out.size()) < n_max)
        throw std::runtime_error("valley scan exhausted: only " +
                                 std::to_string(out.size()) + " roots below E = " +
                                 std::to_string(e_ceiling));
    return out;
}

namespace {

bool level_matches_family(const PotentialSpec& spec, Condition c) {
    switch (c) {
        case Condition::JPrimeZero:
        case Condition::JZero:
        case Condition::JNegPrimeZero:
        case Condition::JNegZero:
            return is_well_family(spec.family);
        case Condition::KPrimeZero:
        case Condition::KZero:
            return is_valley_family(spec.family);
        default:
            return false;
    }
}

bool uses_negative_order(Condition c) {
    return c == Condition::JNegPrimeZero || c == Condition::JNegZero;
}

// Eq.-style two-sided profile for V4: a pair of basis solutions combined so
// that value and slope match at the origin. At a special energy the second
// coefficient collapses to the root residual and the state is a pure J_nu.
struct V4Profile {
    double nu, z0;
    double c_first, c_second;  // psi = c_first*J_nu(z) - c_second*other(z)
    bool use_y_basis;          // near-integer nu: J_{-nu} is degenerate, use Y_nu
    bool negated_order;       // profile built around J_{-nu} instead (nonphysical roots)

    double eval(double z, bool parity_even, double sgn) const {
        double first, second;
        const double order = negated_order ? -nu : nu;
        first = sf::bessel_j(order, z);
        second = use_y_basis ? sf::bessel_y(order, z) : sf::bessel_j(-order, z);
        const double v = c_first * first - c_second * second;
        return parity_even ? v : sgn * v;
    }
};

V4Profile make_v4_profile(const PotentialSpec& spec, const EnergyLevel& level) {
    const WaveParams wp = wave_params(spec, level.energy);
    V4Profile p{};
    p.nu = wp.nu;
    p.z0 = wp.z0;
    p.negated_order = uses_negative_order(level.condition);
    p.use_y_basis = std::abs(wp.nu - std::round(wp.nu)) < 1e-6;
    const double order = p.negated_order ? -wp.nu : wp.nu;
    // even states match on derivatives at z0, odd states on values
    const bool deriv = level.parity == Parity::Even;
    if (p.use_y_basis) {
        p.c_first = sf::bessel_y(order, wp.z0, deriv);
        p.c_second = sf::bessel_j(order, wp.z0, deriv);
    } else {
        p.c_first = sf::bessel_j(-order, wp.z0, deriv);
        p.c_second = sf::bessel_j(order, wp.z0, deriv);
    }
    return p;
}

}  // namespace

WavefunctionGrid wavefunction(const PotentialSpec& spec, const EnergyLevel& level,
                              double x_min, double x_max, int n_points,
                              bool cosmetic_sign_flip) {
    validate_spec(spec);
    if (n_points < 2) throw std::invalid_argument("wavefunction: n_points must be >= 2");
    if (!(x_max > x_min)) throw std::invalid_argument("wavefunction: x_max must exceed x_min");
    if (!level_matches_family(spec, level.condition))
        throw std::invalid_argument("wavefunction: level condition '" +
                                    condition_name(level.condition) +
                                    "' does not belong to family " + family_name(spec.family));

    const WaveParams wp = wave_params(spec, level.energy);
    const double a = spec.a;
    const bool even = level.parity == Parity::Even;
    const bool analytic = spec.family == Family::V3 || spec.family == Family::V6;
    const bool flip = cosmetic_sign_flip && !even && !analytic;

    V4Profile v4{};
    if (spec.family == Family::V4) v4 = make_v4_profile(spec, level);

    WavefunctionGrid g;
    g.xs = linspace(x_min, x_max, n_points);
    g.psi.resize(n_points);
    g.parity = level.parity;
    g.sign_flip_at_origin = flip;

    for (int i = 0; i < n_points; ++i) {
        const double x = g.xs[i];
        const double sgn = (x < 0.0) ? -1.0 : 1.0;
        const double plotted_sgn = flip ? 1.0 : sgn;
        double v = 0.0;
        switch (spec.family) {
            case Family::V4:
                v = v4.eval(wp.z0 * std::exp(std::abs(x) / a), even, plotted_sgn);
                break;
            case Family::V5: {
                const double j = sf::bessel_j(wp.nu, wp.z0 * std::exp(-std::abs(x) / a));
                v = even ? j : plotted_sgn * j;
                break;
            }
            case Family::V6:
                v = sf::bessel_j(wp.nu, wp.z0 * std::exp(-x / a));
                break;
            case Family::V1: {
                const double z = wp.z0 * std::exp(std::abs(x) / a);
                const double k = (z > 700.0) ? 0.0 : sf::bessel_k_imag(wp.nu, z);
                v = even ? k : plotted_sgn * k;
                break;
            }
            case Family::V2: {
                const double k = sf::bessel_k_imag(wp.nu, wp.z0 * std::exp(-std::abs(x) / a));
                v = even ? k : plotted_sgn * k;
                break;
            }
            case Family::V3: {
                const double z = wp.z0 * std::exp(-x / a);
                v = (z > 700.0) ? 0.0 : sf::bessel_k_imag(wp.nu, z);
                break;
            }
            default:
                throw std::invalid_argument("wavefunction: unsupported family");
        }
        g.psi[i] = v;
    }

    // trapezoid L2 normalization on the requested grid
    const double dx = (x_max - x_min) / (n_points - 1);
    double norm2 = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const double w = (i == 0 || i == n_points - 1) ? 0.5 : 1.0;
        norm2 += w * g.psi[i] * g.psi[i];
    }
    norm2 *= dx;
    if (norm2 > 0.0) {
        const double scale = 1.0 / std::sqrt(norm2);
        for (double& v : g.psi) v *= scale;
    }
    // deterministic overall sign: largest-|psi| sample positive
    int imax = 0;
    for (int i = 1; i < n_points; ++i)
        if (std::abs(g.psi[i]) > std::abs(g.psi[imax])) imax = i;
    if (g.psi[imax] < 0.0)
        for (double& v : g.psi) v = -v;
    g.normalized = true;
    return g;
}

}  // namespace besselwell
