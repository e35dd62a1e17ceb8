// Command-line front end: steady-state sweeps, CPA analysis, dressed-state
// ladders, geometry conversions and the time-domain relaxation oracle.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "tcqed/cpa.hpp"
#include "tcqed/dressed.hpp"
#include "tcqed/io.hpp"
#include "tcqed/langevin.hpp"
#include "tcqed/steady_state.hpp"
#include "tcqed/sweep.hpp"

namespace {

using namespace tcqed;

struct GlobalOpts {
    std::string params_path;
    std::string out_path;
    std::string format = "csv";
    bool quiet = false;
};

std::ostream& open_sink(const GlobalOpts& g, std::unique_ptr<std::ofstream>& holder) {
    if (g.out_path.empty()) return std::cout;
    holder = std::make_unique<std::ofstream>(g.out_path);
    if (!*holder)
        throw std::runtime_error("cannot open output file: " + g.out_path);
    return *holder;
}

void emit_table(const SweepTable& table, const GlobalOpts& g) {
    std::unique_ptr<std::ofstream> holder;
    std::ostream& os = open_sink(g, holder);
    if (g.format == "json") write_table_json(os, table);
    else write_table_csv(os, table);
}

DriveMode parse_mode(const std::string& s) {
    if (s == "two-input-equal") return DriveMode::two_input_equal;
    if (s == "single-input-left") return DriveMode::single_input_left;
    if (s == "single-input-right") return DriveMode::single_input_right;
    throw std::invalid_argument("unknown drive mode: " + s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-emitter cavity model: steady-state scattering and "
                 "coherent perfect absorption"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.fallthrough();  // global flags remain valid after a subcommand
    app.add_option("--params", g.params_path, "parameter JSON file");
    app.add_option("--out", g.out_path, "output file (default: stdout)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--quiet", g.quiet, "suppress summary output");

    // spectrum / phase / ddi share the grid options
    double start = -40.0, stop = 40.0;
    int points = 2001;
    std::string mode_str = "two-input-equal";
    bool lock = false;

    auto add_grid = [&](CLI::App* sub, double lo, double hi) {
        start = lo;
        stop = hi;
        sub->add_option("--start", start, "grid start");
        sub->add_option("--stop", stop, "grid stop");
        sub->add_option("--points", points, "grid points (>= 2)");
    };

    auto* spectrum = app.add_subcommand("spectrum", "detuning sweep of the observables");
    add_grid(spectrum, -40.0, 40.0);
    spectrum->add_option("--mode", mode_str, "drive mode")
        ->check(CLI::IsMember({"two-input-equal", "single-input-left",
                               "single-input-right"}));
    spectrum->add_flag("--lock", lock,
                       "hold delta_ac fixed (sweep the emitter detuning)");

    auto* phase = app.add_subcommand("phase", "relative-phase sweep");
    add_grid(phase, -2.0 * pi, 2.0 * pi);

    auto* ddi = app.add_subcommand("ddi", "DDI-strength sweep");
    add_grid(ddi, 0.0, 20.0);
    ddi->add_option("--mode", mode_str, "drive mode")
        ->check(CLI::IsMember({"two-input-equal", "single-input-left",
                               "single-input-right"}));

    auto* cpa = app.add_subcommand("cpa", "perfect-absorption analysis");
    cpa->require_subcommand(1);
    double cg = 10.0, cgamma = 1.0, ckappa = 1.0, cJ = 0.0;
    auto* cpa_solve = cpa->add_subcommand("solve", "analytic detuning solutions");
    cpa_solve->add_option("--g", cg, "coupling strength");
    cpa_solve->add_option("--gamma", cgamma, "emitter decay rate");
    cpa_solve->add_option("--kappa", ckappa, "mirror leakage rate");
    cpa_solve->add_option("--J", cJ, "DDI strength");
    auto* cpa_scan = cpa->add_subcommand("scan", "numerical absorption minima");
    add_grid(cpa_scan, -50.0, 50.0);

    auto* dressed = app.add_subcommand("dressed", "polariton eigensystem and ladder");
    int n_max = 3;
    dressed->add_option("--nmax", n_max, "highest excitation manifold");
    bool truncate = false;
    dressed->add_flag("--weak-excitation", truncate,
                      "drop doubly excited emitter states");

    auto* relax = app.add_subcommand("relax", "time-domain relaxation to steady state");
    double rtol = 1e-9, t_trace = 0.0;
    relax->add_option("--tol", rtol, "convergence tolerance (>= 1e-10)");
    relax->add_option("--trace-until", t_trace,
                      "also write a trajectory CSV up to this time");

    auto* geometry = app.add_subcommand("geometry", "DDI <-> separation conversion");
    double gamma0 = 1.0, omega_eg = 1.0, light_c = 1.0, r12 = 0.0,
           phi = pi / 2.0, gJ = 0.0;
    geometry->add_option("--gamma0", gamma0, "free-space decay rate");
    geometry->add_option("--omega-eg", omega_eg, "transition frequency");
    geometry->add_option("--c", light_c, "speed of light");
    auto* opt_r = geometry->add_option("--r12", r12, "separation (computes J)");
    geometry->add_option("--phi", phi, "dipole angle [rad]");
    auto* opt_j = geometry->add_option("--J", gJ, "DDI strength (computes r12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto load = [&]() {
            if (g.params_path.empty())
                throw std::invalid_argument("--params <file> is required here");
            return load_params_file(g.params_path);
        };

        if (*spectrum) {
            auto pf = load();
            SweepSpec spec{SweepVariable::detuning, start, stop, points,
                           parse_mode(mode_str), lock};
            emit_table(sweep_detuning(pf.params, pf.drive, spec), g);
        } else if (*phase) {
            auto pf = load();
            SweepSpec spec{SweepVariable::phase, start, stop, points,
                           DriveMode::two_input_equal, false};
            emit_table(sweep_phase(pf.params, spec), g);
        } else if (*ddi) {
            auto pf = load();
            SweepSpec spec{SweepVariable::ddi, start, stop, points,
                           parse_mode(mode_str), false};
            emit_table(sweep_ddi(pf.params, pf.drive, spec), g);
        } else if (*cpa_solve) {
            auto solutions = cpa_detuning_solutions(cg, cgamma, ckappa, cJ);
            std::unique_ptr<std::ofstream> holder;
            std::ostream& os = open_sink(g, holder);
            if (solutions.empty()) {
                os << "no real perfect-absorption detunings (weak coupling)\n";
            }
            for (const auto& s : solutions) {
                os << "delta_eg = " << s.delta_eg << "  delta_c = " << s.delta_c
                   << "  delta_ac = " << s.delta_ac << "  branch = "
                   << (s.branch == CpaBranch::plus_minus ? "(+,-)" : "(-,+)")
                   << '\n';
            }
        } else if (*cpa_scan) {
            auto pf = load();
            auto minima = find_absorption_minima(pf.params, pf.drive,
                                                 start, stop, std::max(points, 64));
            std::unique_ptr<std::ofstream> holder;
            std::ostream& os = open_sink(g, holder);
            os << "delta,depth,merged\n";
            for (const auto& m : minima)
                os << m.delta << ',' << m.depth << ',' << (m.merged ? 1 : 0) << '\n';
        } else if (*dressed) {
            auto pf = load();
            std::unique_ptr<std::ofstream> holder;
            std::ostream& os = open_sink(g, holder);
            const auto tm = transform_model(pf.params);
            os << "bright_detuning = " << tm.bright_detuning
               << "  dark_detuning = " << tm.dark_detuning
               << "  bright_coupling = " << tm.bright_coupling << '\n';
            for (int n = 1; n <= n_max; ++n) {
                const auto lvl = polariton_eigensystem(n, pf.params);
                os << "n=" << n << "  lambda+ = " << lvl.lambda_plus
                   << "  lambda- = " << lvl.lambda_minus
                   << "  omega = " << lvl.omega_n << "  phi = " << lvl.phi_n << '\n';
            }
            for (const auto& m : numeric_ladder(pf.params, n_max, !truncate)) {
                os << "manifold " << m.n << " eigenvalues:";
                for (int i = 0; i < m.eigenvalues.size(); ++i)
                    os << ' ' << m.eigenvalues(i);
                os << '\n';
            }
        } else if (*relax) {
            auto pf = load();
            const auto rep = relax_to_steady(pf.params, pf.drive, rtol);
            if (!g.quiet) {
                std::cout << "converged = " << (rep.converged ? "yes" : "no")
                          << "  t = " << rep.final.t
                          << "  residual = " << rep.residual_norm
                          << "  steps = " << rep.steps << '\n'
                          << "a = " << rep.final.a
                          << "  sigma1 = " << rep.final.sigma1
                          << "  sigma2 = " << rep.final.sigma2
                          << "  sz = (" << rep.final.sz1 << ", "
                          << rep.final.sz2 << ")\n";
            }
            if (!rep.converged) return 4;
            if (!g.out_path.empty()) {
                const double horizon = t_trace > 0.0 ? t_trace : rep.final.t;
                auto trace = integrate(pf.params, pf.drive, horizon, 1e-10, 1e-12,
                                       MeanFieldState::ground(), horizon / 1000.0);
                std::ofstream os(g.out_path);
                if (!os)
                    throw std::runtime_error("cannot open output file: " + g.out_path);
                write_trace_csv(os, trace);
            }
        } else if (*geometry) {
            std::unique_ptr<std::ofstream> holder;
            std::ostream& os = open_sink(g, holder);
            if (*opt_r) {
                const double j = ddi_from_geometry(
                    {gamma0, omega_eg, r12, phi, light_c});
                os << "J = " << j << '\n';
            } else if (*opt_j) {
                const double r = separation_from_ddi(gJ, gamma0, omega_eg, light_c);
                os << "r12 = " << r << '\n';
            } else {
                std::cerr << "geometry: give either --r12 or --J\n";
                return 2;
            }
        }
    } catch (const SingularSystemError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 4;
    } catch (const IntegrationError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
