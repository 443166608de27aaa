#include "besselwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "besselwell/rootfind.hpp"

namespace besselwell::oracle {

namespace {

// Raw Numerov march for psi'' = f(x) psi. Positions are x_from + i*sstep with
// sstep signed. If rescale is set, the whole stored array is renormalized
// whenever the running values pass 1e100; otherwise overflow throws.
std::vector<double> numerov_march(const std::function<double(double)>& f, double x_from,
                                  double sstep, long n_points, double psi0, double psi1,
                                  bool rescale) {
    std::vector<double> psi(n_points);
    psi[0] = psi0;
    if (n_points > 1) psi[1] = psi1;
    const double h2_12 = sstep * sstep / 12.0;
    double fm = f(x_from);
    double f0 = f(x_from + sstep);
    for (long i = 2; i < n_points; ++i) {
        const double x = x_from + double(i) * sstep;
        const double fp = f(x);
        const double num =
            (2.0 + 10.0 * h2_12 * f0) * psi[i - 1] - (1.0 - h2_12 * fm) * psi[i - 2];
        psi[i] = num / (1.0 - h2_12 * fp);
        fm = f0;
        f0 = fp;
        const double mag = std::abs(psi[i]);
        if (rescale) {
            if (mag > 1e100) {
                const double s = 1e-100;
                for (long j = 0; j <= i; ++j) psi[j] *= s;
            }
        } else if (mag > 1e300) {
            throw std::overflow_error("numerov_integrate: |psi| exceeded 1e300 in the deep "
                                      "forbidden region; rescale or shorten the interval");
        }
    }
    return psi;
}

long step_count(double x_from, double x_to, double step, double& sstep) {
    if (!(step > 0.0)) throw std::invalid_argument("numerov: step must be > 0");
    const double span = x_to - x_from;
    if (span == 0.0) throw std::invalid_argument("numerov: empty interval");
    const long n = std::lround(std::abs(span) / step) + 1;
    if (n < 2) throw std::invalid_argument("numerov: interval shorter than one step");
    sstep = (span > 0.0 ? 1.0 : -1.0) * std::abs(span) / double(n - 1);
    return n;
}

// 4th-order one-sided derivative at the last stored point, in integration order.
double end_derivative(const std::vector<double>& psi, double sstep) {
    const size_t n = psi.size();
    if (n < 5) throw std::invalid_argument("numerov: need >= 5 points for the end derivative");
    return (25.0 * psi[n - 1] - 48.0 * psi[n - 2] + 36.0 * psi[n - 3] - 16.0 * psi[n - 4] +
            3.0 * psi[n - 5]) /
           (12.0 * sstep);
}

WavefunctionGrid to_ascending_grid(std::vector<double> psi, double x_from, double sstep) {
    WavefunctionGrid g;
    const long n = long(psi.size());
    if (sstep > 0.0) {
        g.xs = linspace(x_from, x_from + sstep * double(n - 1), int(n));
        g.psi = std::move(psi);
    } else {
        g.xs = linspace(x_from + sstep * double(n - 1), x_from, int(n));
        g.psi.assign(psi.rbegin(), psi.rend());
    }
    g.parity = Parity::Even;
    g.normalized = false;
    return g;
}

}  // namespace

WavefunctionGrid numerov_integrate(const std::function<double(double)>& potential,
                                   double energy, double x_from, double x_to, double step,
                                   double psi0, double psi1) {
    double sstep;
    const long n = step_count(x_from, x_to, step, sstep);
    auto f = [&](double x) { return potential(x) - energy; };
    auto psi = numerov_march(f, x_from, sstep, n, psi0, psi1, false);
    return to_ascending_grid(std::move(psi), x_from, sstep);
}

WavefunctionGrid numerov_integrate(const PotentialSpec& spec, double energy, double x_from,
                                   double x_to, double step, double psi0, double psi1) {
    validate_spec(spec);
    return numerov_integrate([&](double x) { return evaluate(spec, x); }, energy, x_from,
                             x_to, step, psi0, psi1);
}

double default_x_start(const PotentialSpec& spec, double energy) {
    validate_spec(spec);
    const double a = spec.a;
    if (is_cubic(spec.family)) return std::cbrt(std::max(energy, 1.0)) + 6.0;
    const double q = std::sqrt(spec.v0);
    switch (spec.family) {
        case Family::V5:
        case Family::V6: {
            // outer region flattens to V0: decay length 1/kappa can be long
            const double kappa = std::sqrt(std::max(spec.v0 - energy, 1e-12));
            const double x_turn = a * std::log(std::max(1.0, q / kappa));
            const double buried = x_turn + std::min(12.0 / kappa, 2e3 * a);
            return std::max(a * std::log(40.0 / (q * a)) + 4.0 * a, buried);
        }
        case Family::V1: {
            // steep exponential wall: 4a past the turning point is plenty
            const double x_turn = 0.5 * a * std::log(energy / spec.v0 + 1.0);
            return std::max(a * std::log(40.0 / (q * a)) + 4.0 * a, x_turn + 4.0 * a);
        }
        case Family::V3: {
            // wall on the left; start is a negative x
            const double x_turn = -0.5 * a * std::log(energy / spec.v0 + 1.0);
            return x_turn - 4.0 * a;
        }
        default:
            throw std::invalid_argument("default_x_start: V4/V2 have no decaying side to shoot from");
    }
}

double shooting_functional(const ShootingProblemFn& p, double energy) {
    if (!(p.grid_step > 0.0)) throw std::invalid_argument("shooting: grid_step must be > 0");
    const double v_start = p.potential(p.x_start);
    if (v_start < energy)
        throw std::invalid_argument("shooting: x_start must lie in the forbidden region");
    double sstep;
    const long n = step_count(p.x_start, p.x_end, p.grid_step, sstep);
    const double h = std::abs(sstep);
    const double eps = 1e-100;
    const double psi1 = eps * std::exp(std::sqrt(v_start - energy) * h);
    auto f = [&](double x) { return p.potential(x) - energy; };
    auto psi = numerov_march(f, p.x_start, sstep, n, eps, psi1, true);
    const double psi_end = psi.back();
    const double dpsi_end = end_derivative(psi, sstep);
    const double scale = std::max(std::abs(psi_end), std::abs(dpsi_end));
    if (scale == 0.0) return 0.0;
    return (p.matching == Matching::PsiZeroAtOrigin ? psi_end : dpsi_end) / scale;
}

double shooting_functional(const ShootingProblem& problem, double energy) {
    ShootingProblemFn fn;
    const PotentialSpec spec = problem.spec;
    fn.potential = [spec](double x) { return evaluate(spec, x); };
    fn.matching = problem.matching;
    fn.x_start = problem.x_start;
    fn.x_end = problem.x_end;
    fn.grid_step = problem.grid_step;
    return shooting_functional(fn, energy);
}

namespace {

EnergyLevel level_from_shoot(const std::function<double(double)>& g, Matching matching,
                             double e_lo, double e_hi) {
    const double g_lo = g(e_lo), g_hi = g(e_hi);
    if (!(g_lo * g_hi < 0.0))
        throw std::runtime_error("eigen_shoot: matching functional has no sign change on the bracket");
    const double e = bisect(g, Bracket{e_lo, e_hi, g_lo, g_hi}, 1e-10);
    EnergyLevel lvl{};
    lvl.energy = e;
    lvl.parity = matching == Matching::DPsiZeroAtOrigin ? Parity::Even : Parity::Odd;
    lvl.condition = matching == Matching::DPsiZeroAtOrigin ? Condition::ShootDPsiZero
                                                           : Condition::ShootPsiZero;
    lvl.residual = std::abs(g(e));
    lvl.bracket_lo = e_lo;
    lvl.bracket_hi = e_hi;
    return lvl;
}

}  // namespace

EnergyLevel eigen_shoot(const ShootingProblemFn& problem, double e_lo, double e_hi) {
    if (!(e_hi > e_lo)) throw std::invalid_argument("eigen_shoot: need e_lo < e_hi");
    auto g = [&](double e) { return shooting_functional(problem, e); };
    return level_from_shoot(g, problem.matching, e_lo, e_hi);
}

EnergyLevel eigen_shoot(const ShootingProblem& problem, double e_lo, double e_hi) {
    if (!(e_hi > e_lo)) throw std::invalid_argument("eigen_shoot: need e_lo < e_hi");
    auto g = [&](double e) { return shooting_functional(problem, e); };
    return level_from_shoot(g, problem.matching, e_lo, e_hi);
}

namespace {

void check_cubic_resolution(double step, double energy, double x_left) {
    const double k_max = std::sqrt(energy + std::abs(x_left * x_left * x_left));
    const double lambda_min = 2.0 * std::numbers::pi / k_max;
    if (step > lambda_min / 30.0)
        throw std::invalid_argument("cubic: step does not resolve the local wavelength near x_left");
}

double cubic_functional(Matching matching, double energy, double x_right, double step) {
    ShootingProblem p;
    p.spec = {Family::Cubic, 1.0, 1.0};
    p.matching = matching;
    p.x_start = (x_right > 0.0) ? x_right : std::cbrt(energy) + 6.0;
    p.x_end = 0.0;
    p.grid_step = step;
    return shooting_functional(p, energy);
}

}  // namespace

std::vector<EnergyLevel> cubic_levels(int n_max, double x_right, double x_left, double step) {
    if (n_max < 1) throw std::invalid_argument("cubic_levels: n_max must be >= 1");
    std::vector<EnergyLevel> merged;
    double e_cap = 6.0;
    while (true) {
        merged.clear();
        check_cubic_resolution(step, e_cap, x_left);
        for (const Matching m : {Matching::DPsiZeroAtOrigin, Matching::PsiZeroAtOrigin}) {
            auto g = [&](double e) { return cubic_functional(m, e, x_right, step); };
            const int n_scan = std::max(64, int(e_cap / 0.05));
            for (const Bracket& b : scan_sign_changes(g, linspace(0.02, e_cap, n_scan))) {
                const double e = bisect(g, b, 1e-10);
                EnergyLevel lvl{};
                lvl.energy = e;
                lvl.parity = m == Matching::DPsiZeroAtOrigin ? Parity::Even : Parity::Odd;
                lvl.condition = m == Matching::DPsiZeroAtOrigin ? Condition::ShootDPsiZero
                                                                : Condition::ShootPsiZero;
                lvl.residual = std::abs(g(e));
                lvl.bracket_lo = b.lo;
                lvl.bracket_hi = b.hi;
                merged.push_back(lvl);
            }
        }
        std::sort(merged.begin(), merged.end(), [](const EnergyLevel& x, const EnergyLevel& y) {
            return x.energy < y.energy;
        });
        if (int(merged.size()) >= n_max || e_cap > 200.0) break;
        e_cap *= 2.0;
    }
    if (int(merged.size()) > n_max) merged.resize(n_max);
    return merged;
}

WavefunctionGrid cubic_wavefunction(const EnergyLevel& level, double x_right, double x_left,
                                    double step) {
    const double e = level.energy;
    const double xr = (x_right > 0.0) ? x_right : std::cbrt(e) + 6.0;
    check_cubic_resolution(step, e, x_left);
    auto f = [&](double x) { return x * x * x - e; };
    // right side: inward from the forbidden region
    double sstep;
    const long n_right = step_count(xr, 0.0, step, sstep);
    const double eps = 1e-100;
    const double psi1 = eps * std::exp(std::sqrt(f(xr)) * std::abs(sstep));
    auto right = numerov_march(f, xr, sstep, n_right, eps, psi1, true);
    // left side: continue the march through the origin
    const long n_left = std::lround(std::abs(x_left) / std::abs(sstep));
    const double h = sstep;  // still negative
    std::vector<double> cont = right;
    cont.reserve(right.size() + n_left);
    {
        const double x0 = 0.0;
        const double h2_12 = h * h / 12.0;
        // continue the recurrence from the last two right-side points
        double pm = cont[cont.size() - 2];
        double pc = cont[cont.size() - 1];
        double f_m = f(x0 - h);  // point before the origin in march order
        double f_c = f(x0);
        for (long i = 1; i <= n_left; ++i) {
            const double x = x0 + double(i) * h;
            const double f_p = f(x);
            const double num = (2.0 + 10.0 * h2_12 * f_c) * pc - (1.0 - h2_12 * f_m) * pm;
            const double pn = num / (1.0 - h2_12 * f_p);
            cont.push_back(pn);
            pm = pc;
            pc = pn;
            f_m = f_c;
            f_c = f_p;
        }
    }
    WavefunctionGrid g = to_ascending_grid(std::move(cont), xr, sstep);
    // trapezoid normalization
    const double dx = g.xs[1] - g.xs[0];
    double norm2 = 0.0;
    for (size_t i = 0; i < g.psi.size(); ++i) {
        const double w = (i == 0 || i + 1 == g.psi.size()) ? 0.5 : 1.0;
        norm2 += w * g.psi[i] * g.psi[i];
    }
    norm2 *= dx;
    if (norm2 > 0.0)
        for (double& v : g.psi) v /= std::sqrt(norm2);
    g.parity = level.parity;
    g.normalized = true;
    return g;
}

MomentResult moment(const WavefunctionGrid& psi, Observable observable, int power,
                    double cutoff) {
    if (power < 1) throw std::invalid_argument("moment: power must be >= 1");
    if (psi.xs.size() < 9) throw std::invalid_argument("moment: grid too small");
    const double dx = psi.xs[1] - psi.xs[0];
    size_t lo = 0, hi = psi.xs.size() - 1;
    while (lo < hi && psi.xs[lo] < -cutoff) ++lo;
    while (hi > lo && psi.xs[hi] > cutoff) --hi;
    if (hi - lo < 8) throw std::invalid_argument("moment: cutoff leaves too few grid points");

    MomentResult res{};
    if (observable == Observable::PPower && power == 1) {
        res.exact_zero = true;
        res.value = 0.0;
        return res;
    }

    auto trapz = [&](const std::vector<double>& f, size_t i0, size_t i1) {
        double s = 0.5 * (f[i0] + f[i1]);
        for (size_t i = i0 + 1; i < i1; ++i) s += f[i];
        return s * dx;
    };

    std::vector<double> density(psi.psi.size());
    for (size_t i = 0; i < psi.psi.size(); ++i) density[i] = psi.psi[i] * psi.psi[i];
    const double norm = trapz(density, lo, hi);
    if (!(norm > 0.0)) throw std::invalid_argument("moment: zero norm on the cutoff domain");

    if (observable == Observable::XPower) {
        std::vector<double> integ(psi.psi.size());
        for (size_t i = lo; i <= hi; ++i) integ[i] = std::pow(psi.xs[i], power) * density[i];
        res.value = trapz(integ, lo, hi) / norm;
    } else {
        if (power != 2 && power != 4)
            throw std::invalid_argument("moment: P_POWER supports powers 1, 2 and 4");
        const int n_deriv = power / 2;
        std::vector<double> d = psi.psi;
        size_t l = lo, r = hi;
        for (int k = 0; k < n_deriv; ++k) {
            std::vector<double> nd(d.size(), 0.0);
            for (size_t i = l + 1; i < r; ++i) nd[i] = (d[i + 1] - d[i - 1]) / (2.0 * dx);
            d = std::move(nd);
            ++l;
            --r;
        }
        std::vector<double> integ(d.size(), 0.0);
        for (size_t i = l; i <= r; ++i) integ[i] = d[i] * d[i];
        res.value = trapz(integ, l, r) / norm;
    }

    // oscillation vs grid resolution near the cutoff edge
    size_t edge0 = hi - (hi - lo) / 5;
    double min_cross = 1e300;
    double last_cross = 0.0;
    bool have_last = false;
    for (size_t i = edge0; i < hi; ++i) {
        if (psi.psi[i] == 0.0 || psi.psi[i] * psi.psi[i + 1] < 0.0) {
            if (have_last) min_cross = std::min(min_cross, psi.xs[i] - last_cross);
            last_cross = psi.xs[i];
            have_last = true;
        }
    }
    if (min_cross < 8.0 * dx) res.resolution_warning = true;
    return res;
}

}  // namespace besselwell::oracle
