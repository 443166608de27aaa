#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "besselwell/oracle.hpp"
#include "besselwell/potentials.hpp"
#include "besselwell/rootfind.hpp"
#include "besselwell/scattering.hpp"
#include "besselwell/specfun.hpp"
#include "besselwell/spectra.hpp"

using nlohmann::json;
using namespace besselwell;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

// Data goes to stdout or --output; diagnostics stay on stderr.
void write_payload(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << payload;
}

struct CommonOpts {
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output, "Write to file instead of stdout");
}

json level_to_json(const EnergyLevel& l) {
    return json{{"E", l.energy},
                {"parity", parity_name(l.parity)},
                {"condition", condition_name(l.condition)},
                {"residual", l.residual}};
}

std::string levels_csv(const std::vector<EnergyLevel>& levels) {
    std::string s = "E,parity,condition,residual\n";
    for (const auto& l : levels)
        s += fmt17(l.energy) + "," + parity_name(l.parity) + "," +
             condition_name(l.condition) + "," + fmt17(l.residual) + "\n";
    return s;
}

json meta_tolerances() {
    return json{{"tolerances",
                 {{"bisection_rel", 1e-12}, {"duplicate_merge", 1e-9}, {"scan_points", 2000}}}};
}

std::vector<EnergyLevel> collect_levels(Family family, double v0, double a,
                                        const std::string& parity, int n, bool nonphysical,
                                        double e_ceiling) {
    std::vector<Parity> parities;
    if (parity == "even" || parity == "both") parities.push_back(Parity::Even);
    if (parity == "odd" || parity == "both") parities.push_back(Parity::Odd);
    std::vector<EnergyLevel> merged;
    for (Parity p : parities) {
        std::vector<EnergyLevel> part;
        if (nonphysical) {
            part = nonphysical_states(v0, a, p, n);
        } else if (is_well_family(family)) {
            part = special_states_well_family(v0, a, p, n);
        } else {
            part = special_states_valley_family(v0, a, p, n, e_ceiling, true);
        }
        merged.insert(merged.end(), part.begin(), part.end());
    }
    std::sort(merged.begin(), merged.end(),
              [](const EnergyLevel& x, const EnergyLevel& y) { return x.energy < y.energy; });
    if (int(merged.size()) > n) merged.resize(n);
    if (is_valley_family(family) && int(merged.size()) < n)
        throw std::runtime_error("valley scan exhausted below the energy ceiling; raise --emax");
    return merged;
}

EnergyLevel pick_level(Family family, double v0, double a, const std::string& parity,
                       int index, bool nonphysical, double e_ceiling) {
    if (parity == "both") throw std::invalid_argument("pick a parity (even or odd) for this command");
    const Parity p = parity == "even" ? Parity::Even : Parity::Odd;
    std::vector<EnergyLevel> part;
    if (nonphysical) {
        part = nonphysical_states(v0, a, p, index + 1);
    } else if (is_well_family(family)) {
        part = special_states_well_family(v0, a, p, index + 1);
    } else {
        part = special_states_valley_family(v0, a, p, index + 1, e_ceiling);
    }
    if (int(part.size()) <= index)
        throw std::invalid_argument("level index " + std::to_string(index) +
                                    " out of range: only " + std::to_string(part.size()) +
                                    " level(s) found");
    return part[index];
}

int grid_points_auto(const PotentialSpec& spec, double energy, double half_width) {
    double k_max = std::sqrt(std::max(energy - evaluate(spec, 0.0), 1.0));
    for (double x : {half_width, -half_width}) {
        const double k2 = energy - evaluate(spec, x);
        if (k2 > 0.0) k_max = std::max(k_max, std::sqrt(k2));
    }
    const long n = std::lround(30.0 * 2.0 * half_width * k_max / (2.0 * std::numbers::pi)) + 1;
    return int(std::clamp(n, 4001L, 3000001L));
}

int run_validate();

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"besselwell: bound states, special scattering states and transfer matrices "
                 "of one-dimensional exponential and cubic potentials"};
    app.set_config("--config", "", "Flat key=value config file (flags override)");
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "3-decimal human summary and metadata on stderr");

    // --- spectrum ---
    auto* sp = app.add_subcommand("spectrum", "Discrete energies from the transcendental conditions")->configurable()->fallthrough();
    std::string sp_family = "v5", sp_parity = "both";
    double sp_v0 = 1.0, sp_a = 1.0, sp_emax = 0.0;
    int sp_n = 4;
    bool sp_nonphys = false;
    CommonOpts sp_c;
    sp->add_option("--family", sp_family, "v1..v6")->required();
    sp->add_option("--v0", sp_v0, "well/valley depth V0 > 0")->required();
    sp->add_option("--a", sp_a, "length scale a > 0")->capture_default_str();
    sp->add_option("--n", sp_n, "number of levels")->capture_default_str();
    sp->add_option("--parity", sp_parity, "even|odd|both")
        ->check(CLI::IsMember({"even", "odd", "both"}))
        ->capture_default_str();
    sp->add_flag("--nonphysical", sp_nonphys, "roots of the negative-order conditions");
    sp->add_option("--emax", sp_emax, "energy ceiling for the valley-family scan (0 = default)");
    add_common(sp, sp_c);

    // --- scatter ---
    auto* sc = app.add_subcommand("scatter", "Amplitude sweep A, B, R, T over an energy range")->configurable()->fallthrough();
    std::string sc_family = "v4";
    double sc_v0 = 1.0, sc_a = 1.0, sc_emin = 0.0, sc_emax = 0.0;
    int sc_steps = 10;
    CommonOpts sc_c;
    sc->add_option("--family", sc_family, "v4|v2")->check(CLI::IsMember({"v4", "v2"}))->required();
    sc->add_option("--v0", sc_v0)->required();
    sc->add_option("--a", sc_a)->capture_default_str();
    sc->add_option("--emin", sc_emin)->required();
    sc->add_option("--emax", sc_emax)->required();
    sc->add_option("--steps", sc_steps)->capture_default_str();
    add_common(sc, sc_c);

    // --- wavefunction ---
    auto* wf = app.add_subcommand("wavefunction", "Sampled normalized wavefunction of a level")->configurable()->fallthrough();
    std::string wf_family = "v5", wf_parity = "even";
    double wf_v0 = 1.0, wf_a = 1.0, wf_xmin = -6.0, wf_xmax = 6.0, wf_emax = 0.0;
    int wf_index = 0, wf_points = 2001;
    bool wf_flip = false, wf_nonphys = false;
    CommonOpts wf_c;
    wf->add_option("--family", wf_family, "v1..v6")->required();
    wf->add_option("--v0", wf_v0)->required();
    wf->add_option("--a", wf_a)->capture_default_str();
    wf->add_option("--parity", wf_parity, "even|odd")
        ->check(CLI::IsMember({"even", "odd"}))
        ->capture_default_str();
    wf->add_option("--index", wf_index, "level index within the parity class")->capture_default_str();
    wf->add_option("--xmin", wf_xmin)->capture_default_str();
    wf->add_option("--xmax", wf_xmax)->capture_default_str();
    wf->add_option("--points", wf_points)->capture_default_str();
    wf->add_flag("--cosmetic-flip", wf_flip, "reverse the x<0 branch of odd states (cusp-free plot form)");
    wf->add_flag("--nonphysical", wf_nonphys);
    wf->add_option("--emax", wf_emax, "valley-family scan ceiling (0 = default)");
    add_common(wf, wf_c);

    // --- transfer ---
    auto* tr = app.add_subcommand("transfer", "Transfer matrix at a given energy")->configurable()->fallthrough();
    std::string tr_family = "v4";
    double tr_v0 = 1.0, tr_a = 1.0, tr_e = 1.0;
    CommonOpts tr_c;
    tr->add_option("--family", tr_family, "v4|v2")->check(CLI::IsMember({"v4", "v2"}))->required();
    tr->add_option("--v0", tr_v0)->required();
    tr->add_option("--a", tr_a)->capture_default_str();
    tr->add_option("--energy", tr_e)->required();
    add_common(tr, tr_c);

    // --- poles ---
    auto* po = app.add_subcommand("poles", "Zeros of A after the V0 -> -V0 sign flip")->configurable()->fallthrough();
    std::string po_family = "v4";
    double po_v0 = 1.0, po_a = 1.0, po_emin = 0.0, po_emax = 0.0;
    int po_n = 4;
    bool po_flip = false;
    CommonOpts po_c;
    po->add_option("--family", po_family, "v4|v2")->check(CLI::IsMember({"v4", "v2"}))->required();
    po->add_flag("--flip-sign", po_flip, "apply V0 -> -V0 (required)");
    po->add_option("--v0", po_v0)->required();
    po->add_option("--a", po_a)->capture_default_str();
    po->add_option("--emin", po_emin);
    po->add_option("--emax", po_emax);
    po->add_option("--n", po_n)->capture_default_str();
    add_common(po, po_c);

    // --- cubic ---
    auto* cu = app.add_subcommand("cubic", "Hybrid levels of V(x) = x^3 and wavefunction dumps")->configurable()->fallthrough();
    double cu_xr = 0.0, cu_xl = -8.0, cu_step = 5e-4;
    int cu_n = 2, cu_index = 0;
    bool cu_dump = false;
    CommonOpts cu_c;
    cu->add_option("--n", cu_n)->capture_default_str();
    cu->add_option("--x-right", cu_xr, "right start (0 = cbrt(E) + 6)");
    cu->add_option("--x-left", cu_xl)->capture_default_str();
    cu->add_option("--step", cu_step)->capture_default_str();
    cu->add_flag("--dump-wavefunction", cu_dump, "emit the grid of level --index instead of the list");
    cu->add_option("--index", cu_index)->capture_default_str();
    add_common(cu, cu_c);

    // --- moments ---
    auto* mo = app.add_subcommand("moments", "<x^n> / <p^n> of a level on a cutoff domain")->configurable()->fallthrough();
    std::string mo_family = "v4", mo_parity = "even", mo_obs = "x";
    double mo_v0 = 1.0, mo_a = 1.0, mo_cutoff = 4.0, mo_emax = 0.0;
    int mo_index = 0, mo_power = 2, mo_points = 0;
    CommonOpts mo_c;
    mo->add_option("--family", mo_family)->required();
    mo->add_option("--v0", mo_v0)->required();
    mo->add_option("--a", mo_a)->capture_default_str();
    mo->add_option("--parity", mo_parity)->check(CLI::IsMember({"even", "odd"}))->capture_default_str();
    mo->add_option("--index", mo_index)->capture_default_str();
    mo->add_option("--observable", mo_obs, "x|p")->check(CLI::IsMember({"x", "p"}))->capture_default_str();
    mo->add_option("--power", mo_power)->capture_default_str();
    mo->add_option("--cutoff", mo_cutoff, "half-width L of the integration domain")->capture_default_str();
    mo->add_option("--points", mo_points, "grid points (0 = auto from the local wavelength)");
    mo->add_option("--emax", mo_emax, "valley-family scan ceiling (0 = default)");
    add_common(mo, mo_c);

    // --- validate ---
    auto* va = app.add_subcommand("validate", "Run the identity/invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sp->parsed()) {
            const Family fam = family_from_name(sp_family);
            if (sp_nonphys && !is_well_family(fam))
                throw std::invalid_argument("--nonphysical applies to the well family (v4/v5/v6)");
            auto levels = collect_levels(fam, sp_v0, sp_a, sp_parity, sp_n, sp_nonphys, sp_emax);
            if (sp_c.format == "csv") {
                write_payload(sp_c.output, levels_csv(levels));
            } else {
                json j{{"family", sp_family}, {"v0", sp_v0}, {"a", sp_a},
                       {"levels", json::array()}, {"meta", meta_tolerances()}};
                j["meta"]["nonphysical"] = sp_nonphys;
                for (const auto& l : levels) j["levels"].push_back(level_to_json(l));
                write_payload(sp_c.output, j.dump(2) + "\n");
            }
            if (verbose) {
                std::cerr << "# " << sp_family << " V0=" << fmt3(sp_v0) << " a=" << fmt3(sp_a) << "\n";
                for (size_t i = 0; i < levels.size(); ++i)
                    std::cerr << "# E_" << i << " = " << fmt3(levels[i].energy) << " ("
                              << parity_name(levels[i].parity) << ")\n";
            }
        } else if (sc->parsed()) {
            if (!(sc_emax > sc_emin)) throw std::invalid_argument("need emin < emax");
            if (sc_steps < 1) throw std::invalid_argument("need steps >= 1");
            const bool v4 = sc_family == "v4";
            std::vector<double> es = sc_steps == 1 ? std::vector<double>{sc_emin}
                                                   : linspace(sc_emin, sc_emax, sc_steps);
            std::string csv = "E,ReA,ImA,ReB,ImB,R,T\n";
            json pts = json::array();
            for (double e : es) {
                const ScatteringResult r =
                    v4 ? amplitudes_v4(e, sc_v0, sc_a) : amplitudes_v2(e, sc_v0, sc_a);
                if (sc_c.format == "csv") {
                    csv += fmt17(e) + "," + fmt17(r.A.real()) + "," + fmt17(r.A.imag()) + "," +
                           fmt17(r.B.real()) + "," + fmt17(r.B.imag()) + "," + fmt17(r.R) + "," +
                           fmt17(r.T) + "\n";
                } else {
                    pts.push_back(json{{"E", e}, {"ReA", r.A.real()}, {"ImA", r.A.imag()},
                                       {"ReB", r.B.real()}, {"ImB", r.B.imag()},
                                       {"R", r.R}, {"T", r.T}});
                }
            }
            if (sc_c.format == "csv") {
                write_payload(sc_c.output, csv);
            } else {
                json j{{"family", sc_family}, {"v0", sc_v0}, {"a", sc_a}, {"points", pts},
                       {"meta", meta_tolerances()}};
                write_payload(sc_c.output, j.dump(2) + "\n");
            }
        } else if (wf->parsed()) {
            const Family fam = family_from_name(wf_family);
            const EnergyLevel lvl =
                pick_level(fam, wf_v0, wf_a, wf_parity, wf_index, wf_nonphys, wf_emax);
            const PotentialSpec spec{fam, wf_v0, wf_a};
            const WavefunctionGrid g =
                wavefunction(spec, lvl, wf_xmin, wf_xmax, wf_points, wf_flip);
            if (wf_c.format == "csv") {
                std::string csv = "x,psi\n";
                for (size_t i = 0; i < g.xs.size(); ++i)
                    csv += fmt17(g.xs[i]) + "," + fmt17(g.psi[i]) + "\n";
                write_payload(wf_c.output, csv);
            } else {
                json j{{"family", wf_family}, {"v0", wf_v0}, {"a", wf_a}, {"E", lvl.energy},
                       {"parity", parity_name(lvl.parity)},
                       {"condition", condition_name(lvl.condition)},
                       {"normalized", g.normalized},
                       {"sign_flip_at_origin", g.sign_flip_at_origin},
                       {"x", g.xs}, {"psi", g.psi}, {"meta", meta_tolerances()}};
                write_payload(wf_c.output, j.dump(2) + "\n");
            }
            if (verbose) std::cerr << "# E = " << fmt3(lvl.energy) << "\n";
        } else if (tr->parsed()) {
            const ScatteringResult r = tr_family == "v4" ? amplitudes_v4(tr_e, tr_v0, tr_a)
                                                         : amplitudes_v2(tr_e, tr_v0, tr_a);
            const TransferMatrix m = transfer_matrix(r);
            const Complex det = m.m11 * m.m22 - m.m12 * m.m21;
            const Complex u1 = m.m11 + m.m12, u2 = m.m21 + m.m22;
            const double eig_res = std::min(std::abs(u1 - 1.0) + std::abs(u2 - 1.0),
                                            std::abs(u1 + 1.0) + std::abs(u2 + 1.0));
            if (tr_c.format == "csv") {
                std::string csv =
                    "E,Rem11,Imm11,Rem12,Imm12,Rem21,Imm21,Rem22,Imm22,Redet,Imdet,eigvec_residual\n";
                csv += fmt17(tr_e) + "," + fmt17(m.m11.real()) + "," + fmt17(m.m11.imag()) + "," +
                       fmt17(m.m12.real()) + "," + fmt17(m.m12.imag()) + "," +
                       fmt17(m.m21.real()) + "," + fmt17(m.m21.imag()) + "," +
                       fmt17(m.m22.real()) + "," + fmt17(m.m22.imag()) + "," +
                       fmt17(det.real()) + "," + fmt17(det.imag()) + "," + fmt17(eig_res) + "\n";
                write_payload(tr_c.output, csv);
            } else {
                auto cj = [](Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; };
                json j{{"family", tr_family}, {"v0", tr_v0}, {"a", tr_a}, {"E", tr_e},
                       {"m11", cj(m.m11)}, {"m12", cj(m.m12)}, {"m21", cj(m.m21)},
                       {"m22", cj(m.m22)}, {"det", cj(det)}, {"eigvec_residual", eig_res},
                       {"meta", meta_tolerances()}};
                write_payload(tr_c.output, j.dump(2) + "\n");
            }
        } else if (po->parsed()) {
            if (!po_flip)
                throw std::invalid_argument("poles requires --flip-sign (A has no zeros otherwise)");
            const Family fam = family_from_name(po_family);
            auto levels = find_poles(fam, po_v0, po_a, true, po_emin, po_emax, po_n);
            if (po_c.format == "csv") {
                write_payload(po_c.output, levels_csv(levels));
            } else {
                json j{{"family", po_family}, {"v0", po_v0}, {"a", po_a}, {"flip_sign", true},
                       {"corresponds_to", po_family == "v4" ? "v1 bound states" : "v5 bound states"},
                       {"levels", json::array()}, {"meta", meta_tolerances()}};
                for (const auto& l : levels) j["levels"].push_back(level_to_json(l));
                write_payload(po_c.output, j.dump(2) + "\n");
            }
            if (verbose)
                for (size_t i = 0; i < levels.size(); ++i)
                    std::cerr << "# pole_" << i << " = " << fmt3(levels[i].energy) << "\n";
        } else if (cu->parsed()) {
            auto levels = oracle::cubic_levels(std::max(cu_n, cu_dump ? cu_index + 1 : cu_n),
                                               cu_xr, cu_xl, cu_step);
            if (cu_dump) {
                if (int(levels.size()) <= cu_index)
                    throw std::invalid_argument("cubic level index out of range");
                const auto g = oracle::cubic_wavefunction(levels[cu_index], cu_xr, cu_xl, cu_step);
                if (cu_c.format == "csv") {
                    std::string csv = "x,psi\n";
                    for (size_t i = 0; i < g.xs.size(); ++i)
                        csv += fmt17(g.xs[i]) + "," + fmt17(g.psi[i]) + "\n";
                    write_payload(cu_c.output, csv);
                } else {
                    json j{{"family", "cubic"}, {"E", levels[cu_index].energy},
                           {"parity", parity_name(levels[cu_index].parity)},
                           {"x", g.xs}, {"psi", g.psi}, {"meta", meta_tolerances()}};
                    write_payload(cu_c.output, j.dump(2) + "\n");
                }
            } else {
                if (int(levels.size()) > cu_n) levels.resize(cu_n);
                if (cu_c.format == "csv") {
                    write_payload(cu_c.output, levels_csv(levels));
                } else {
                    json j{{"family", "cubic"}, {"levels", json::array()},
                           {"meta", {{"x_left", cu_xl}, {"step", cu_step}}}};
                    for (const auto& l : levels) j["levels"].push_back(level_to_json(l));
                    write_payload(cu_c.output, j.dump(2) + "\n");
                }
            }
            if (verbose)
                for (size_t i = 0; i < levels.size(); ++i)
                    std::cerr << "# E_" << i << " = " << fmt3(levels[i].energy) << "\n";
        } else if (mo->parsed()) {
            const Family fam = family_from_name(mo_family);
            const oracle::Observable obs =
                mo_obs == "x" ? oracle::Observable::XPower : oracle::Observable::PPower;
            WavefunctionGrid g;
            double level_e;
            std::string parity_str = mo_parity;
            if (is_cubic(fam)) {
                auto levels = oracle::cubic_levels(mo_index + 1);
                level_e = levels[mo_index].energy;
                parity_str = parity_name(levels[mo_index].parity);
                g = oracle::cubic_wavefunction(levels[mo_index], 0.0,
                                               -std::max(8.0, mo_cutoff + 1.0), 5e-4);
            } else {
                const EnergyLevel lvl = pick_level(fam, mo_v0, mo_a, mo_parity, mo_index, false, mo_emax);
                level_e = lvl.energy;
                const PotentialSpec spec{fam, mo_v0, mo_a};
                const int n = mo_points > 0 ? mo_points : grid_points_auto(spec, lvl.energy, mo_cutoff);
                g = wavefunction(spec, lvl, -mo_cutoff, mo_cutoff, n, false);
            }
            const auto res = oracle::moment(g, obs, mo_power, mo_cutoff);
            if (res.resolution_warning)
                std::cerr << "warning: oscillation near the cutoff approaches the grid step\n";
            if (mo_c.format == "csv") {
                std::string csv = "family,E,observable,power,cutoff,value\n";
                csv += mo_family + "," + fmt17(level_e) + "," + mo_obs + "," +
                       std::to_string(mo_power) + "," + fmt17(mo_cutoff) + "," +
                       fmt17(res.value) + "\n";
                write_payload(mo_c.output, csv);
            } else {
                json j{{"family", mo_family}, {"v0", mo_v0}, {"a", mo_a}, {"E", level_e},
                       {"parity", parity_str}, {"observable", mo_obs}, {"power", mo_power},
                       {"cutoff", mo_cutoff}, {"value", res.value},
                       {"resolution_warning", res.resolution_warning},
                       {"exact_zero", res.exact_zero}, {"meta", meta_tolerances()}};
                write_payload(mo_c.output, j.dump(2) + "\n");
            }
            if (res.exact_zero)
                std::cerr << "note: <p> of a real wavefunction is the integral of a total "
                             "derivative; reported as exactly 0\n";
        } else if (va->parsed()) {
            return run_validate();
        }
    } catch (const RegimeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

namespace {

int run_validate() {
    int passed = 0, failed = 0;
    auto report = [&](const std::string& name, double dev, double tol) {
        const bool ok = dev < tol;
        (ok ? passed : failed) += 1;
        std::printf("%-44s %s  (max dev %.3g, tol %.0e)\n", name.c_str(),
                    ok ? "ok  " : "FAIL", dev, tol);
    };

    const auto rep = specfun::self_test();
    report("hankel wronskian", rep.wronskian_dev, 1e-10);
    report("hankel conjugation (exact)", rep.conjugation_dev, 1e-300);
    report("K vs rotated Hankel", rep.kh_identity_dev, 1e-9);
    report("small-z law", rep.small_z_dev, 1e-6);
    report("derivatives vs finite differences", rep.derivative_dev, 1e-6);
    report("|Gamma(1+iy)|^2 identity", rep.gamma_dev, 1e-12);

    // family gluing
    double glue = 0.0;
    for (double x : linspace(-3.0, 3.0, 41)) {
        const PotentialSpec v3{Family::V3, 2.5, 1.3}, v6{Family::V6, 2.5, 1.3};
        const PotentialSpec v1{Family::V1, 2.5, 1.3}, v2{Family::V2, 2.5, 1.3};
        const PotentialSpec v4{Family::V4, 2.5, 1.3}, v5{Family::V5, 2.5, 1.3};
        if (x < 0) glue = std::max(glue, std::abs(evaluate(v6, x) - evaluate(v4, x)));
        if (x > 0) glue = std::max(glue, std::abs(evaluate(v6, x) - evaluate(v5, x)));
        if (x < 0) glue = std::max(glue, std::abs(evaluate(v3, x) - evaluate(v1, x)));
        if (x > 0) glue = std::max(glue, std::abs(evaluate(v3, x) - evaluate(v2, x)));
    }
    report("family gluing identities", glue, 1e-12);

    // unitarity sweeps
    double u4 = 0.0, u2 = 0.0, re_b = 0.0;
    for (double e : linspace(0.02 * 50, 0.98 * 50, 50)) {
        const auto r = amplitudes_v4(e, 50, 1);
        u4 = std::max(u4, std::abs(std::norm(r.A) - std::norm(r.B) - 1.0));
        re_b = std::max(re_b, std::abs(r.B.real()) / std::abs(r.B));
    }
    for (double e : linspace(0.1, 40.0, 50)) {
        const auto r = amplitudes_v2(e, 5, 1);
        u2 = std::max(u2, std::abs(std::norm(r.A) - std::norm(r.B) - 1.0));
    }
    report("V4 unitarity |A|^2-|B|^2=1", u4, 1e-8);
    report("V4 B purely imaginary", re_b, 1e-10);
    report("V2 unitarity |A|^2-|B|^2=1", u2, 1e-8);

    // special-energy identities and the transfer matrix
    const auto ev = special_states_well_family(50, 1, Parity::Even, 1);
    const auto od = special_states_well_family(50, 1, Parity::Odd, 1);
    const auto r0 = amplitudes_v4(ev[0].energy, 50, 1);
    const auto r1 = amplitudes_v4(od[0].energy, 50, 1);
    report("B - A = -1 at the J'-zero energy", std::abs(r0.B - r0.A + 1.0), 1e-6);
    report("B - A = +1 at the J-zero energy", std::abs(r1.B - r1.A - 1.0), 1e-6);
    const auto m = transfer_matrix(r0);
    const Complex u1v = m.m11 + m.m12, u2v = m.m21 + m.m22;
    const double eig = std::min(std::abs(u1v - 1.0) + std::abs(u2v - 1.0),
                                std::abs(u1v + 1.0) + std::abs(u2v + 1.0));
    report("transfer matrix eigenvector (1,1)", eig, 1e-6);
    report("transfer matrix det = 1",
           std::abs(m.m11 * m.m22 - m.m12 * m.m21 - 1.0), 1e-9);

    // flux
    report("flux 2/(pi a)",
           std::abs(probability_flux(2.3, 1.0, {1.0, 0.0}) - 2.0 / std::numbers::pi), 1e-10);

    // pole <-> bound-state correspondence
    const auto p4 = find_poles(Family::V4, 5, 1, true, 0, 0, 2);
    const auto ve = special_states_valley_family(5, 1, Parity::Even, 1);
    const auto vo = special_states_valley_family(5, 1, Parity::Odd, 1);
    const double pole_dev = std::max(std::abs(p4[0].energy - ve[0].energy),
                                     std::abs(p4[1].energy - vo[0].energy));
    report("pole/bound-state correspondence", pole_dev, 1e-8);

    std::printf("validate: %d/%d checks passed\n", passed, passed + failed);
    return failed == 0 ? 0 : 1;
}

}  // namespace
