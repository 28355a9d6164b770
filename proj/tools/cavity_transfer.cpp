#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cct/analytic.hpp"
#include "cct/coherent.hpp"
#include "cct/fock.hpp"
#include "cct/io.hpp"
#include "cct/model.hpp"
#include "cct/transfer.hpp"
#include "cct/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;

struct Options {
    cct::ModelParams params;
    double t_max = 0.0;
    int points = 0;  // 0: derive from the fastest Rabi period
    double window_lo = 0.0;
    double window_hi = 10.0;
    double rel_tol = 1e-4;
    double alpha = 1.0;
    double mu_re = 1.0, mu_im = 0.0;
    double nu_re = 0.0, nu_im = 0.0;
    double time = 0.0;
    double pop_cap = 1.0;
    double delta_from = 0.0, delta_to = 0.0, delta_step = 1.0;
    std::uint64_t seed = 20181002;
    int trials = 1000;
    int cutoff = 5;
    bool include_as_printed_eq10 = false;
    std::string out;
    std::string svg;
    std::string config_path;
};

std::string trim(const std::string& s) {
    const auto lo = s.find_first_not_of(" \t\r");
    if (lo == std::string::npos) {
        return "";
    }
    return s.substr(lo, s.find_last_not_of(" \t\r") - lo + 1);
}

// Loads `key = value` pairs into the parsed subcommand's options. Values given
// on the command line keep priority; keys with no matching flag are errors.
// CLI11 only applies config files attached to the root app, so subcommand
// configs are applied by hand here.
int apply_config(CLI::App* cmd, const Options& opt) {
    std::ifstream in(opt.config_path);
    if (!in) {
        std::cerr << "error: cannot read config file '" << opt.config_path
                  << "'\n";
        return kExitBadInput;
    }
    std::string line;
    while (std::getline(in, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: malformed config line '" << stripped << "'\n";
            return kExitBadInput;
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        CLI::Option* target = cmd->get_option_no_throw("--" + key);
        if (target == nullptr || key == "config") {
            std::cerr << "error: unknown config key '" << key << "'\n";
            return kExitBadInput;
        }
        if (target->count() > 0) {
            continue;
        }
        try {
            target->add_result(value);
            target->run_callback();
        } catch (const CLI::Error& e) {
            std::cerr << "error: bad value for config key '" << key
                      << "': " << e.what() << '\n';
            return kExitBadInput;
        }
    }
    return kExitOk;
}

void add_param_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--omega", opt.params.omega, "Cavity frequency (global unit)");
    cmd->add_option("--delta", opt.params.delta, "Exciton-cavity detuning");
    cmd->add_option("--g", opt.params.g, "Dot-cavity coupling");
    cmd->add_option("--c", opt.params.c, "Inter-cavity hopping");
    cmd->add_option("--config", opt.config_path,
                    "Plain key = value config file; flags override");
}

void add_qubit_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--alpha", opt.alpha, "Coherent amplitude");
    cmd->add_option("--mu-re", opt.mu_re, "Re(mu)");
    cmd->add_option("--mu-im", opt.mu_im, "Im(mu)");
    cmd->add_option("--nu-re", opt.nu_re, "Re(nu)");
    cmd->add_option("--nu-im", opt.nu_im, "Im(nu)");
}

cct::CoherentQubit make_qubit(const Options& opt) {
    return cct::CoherentQubit{cct::Complex(opt.alpha, 0.0),
                              cct::Complex(opt.mu_re, opt.mu_im),
                              cct::Complex(opt.nu_re, opt.nu_im)};
}

int default_points(const cct::ModelParams& params, double t_max) {
    const auto [a, b, f] = cct::rabi_frequencies(params);
    const double fastest = std::max({a, b, f});
    if (fastest <= 0.0) {
        return 1001;
    }
    const double step = std::numbers::pi / (10.0 * fastest);
    return static_cast<int>(std::ceil(t_max / step)) + 1;
}

// Writes through `emit` either to stdout or to the given path.
template <typename Emit>
int write_output(const std::string& path, Emit&& emit) {
    if (path.empty()) {
        emit(std::cout);
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kExitIo;
    }
    emit(file);
    if (!file) {
        std::cerr << "error: write failed for '" << path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_simulate(const Options& opt) {
    if (!(opt.t_max > 0.0)) {
        std::cerr << "error: simulate needs --t-max > 0\n";
        return kExitBadInput;
    }
    const int n = opt.points > 0 ? opt.points : default_points(opt.params, opt.t_max);
    const cct::Trajectory traj = cct::population_trajectory(opt.params, opt.t_max, n);
    const int rc = write_output(
        opt.out, [&](std::ostream& os) { cct::write_trajectory_csv(os, traj); });
    if (rc != kExitOk) {
        return rc;
    }
    if (!opt.svg.empty()) {
        return write_output(opt.svg, [&](std::ostream& os) {
            cct::write_trajectory_svg(os, traj);
        });
    }
    return kExitOk;
}

int run_find_tstar(const Options& opt) {
    const cct::TransferResult r = cct::find_transfer_time(
        opt.params, {opt.window_lo, opt.window_hi}, opt.rel_tol);
    std::cout << "t_star=" << cct::format_g17(r.t_star) << '\n'
              << "quality=" << cct::format_g17(r.quality) << '\n'
              << "phase=" << cct::format_g17(r.phase) << '\n'
              << "max_f_pop=" << cct::format_g17(r.max_f_pop) << '\n';
    return kExitOk;
}

int run_fidelity(const Options& opt) {
    const cct::CoherentQubit q = make_qubit(opt);
    const double raw = cct::qubit_transfer_fidelity(q, opt.params, opt.time, false);
    const double corrected =
        cct::qubit_transfer_fidelity(q, opt.params, opt.time, true);
    const double n_bar = cct::avg_photon_number(q, opt.params, opt.time);
    std::cout << "raw_fidelity=" << cct::format_g17(raw) << '\n'
              << "phase_corrected_fidelity=" << cct::format_g17(corrected) << '\n'
              << "avg_photon_number=" << cct::format_g17(n_bar) << '\n';
    return kExitOk;
}

int run_sweep(const Options& opt) {
    if (!(opt.delta_step > 0.0) || opt.delta_to < opt.delta_from) {
        std::cerr << "error: invalid detuning grid\n";
        return kExitBadInput;
    }
    std::vector<double> grid;
    for (double d = opt.delta_from; d <= opt.delta_to + 0.5 * opt.delta_step;
         d += opt.delta_step) {
        grid.push_back(d);
    }
    // design_search returns the feasible subset; the CSV reports every grid
    // point with a feasibility flag, in grid order.
    std::vector<cct::SweepRow> rows(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        cct::ModelParams p{opt.params.omega, grid[i], opt.params.g, opt.params.c};
        rows[i].delta = grid[i];
        rows[i].result =
            cct::find_transfer_time(p, {opt.window_lo, opt.window_hi}, opt.rel_tol);
        rows[i].feasible = rows[i].result.max_f_pop <= opt.pop_cap;
    }
    return write_output(opt.out,
                        [&](std::ostream& os) { cct::write_sweep_csv(os, rows); });
}

int run_validate(const Options& opt) {
    if (opt.trials == 0) {
        std::cout << "warning: 0 trials requested; all suites pass vacuously\n";
    }
    cct::ValidationOptions vopt{opt.seed, opt.trials, opt.include_as_printed_eq10};
    const auto results = cct::run_validation(vopt);
    bool all_passed = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << ' ' << r.name
                  << " worst=" << cct::format_g17(r.worst)
                  << " tolerance=" << cct::format_g17(r.tolerance);
        if (!r.detail.empty()) {
            std::cout << " at " << r.detail;
        }
        std::cout << '\n';
        all_passed = all_passed && r.passed;
    }
    return all_passed ? kExitOk : kExitValidation;
}

int run_oracle(const Options& opt) {
    if (std::abs(opt.alpha) > 0.3) {
        std::cerr << "error: oracle runs require |alpha| <= 0.3\n";
        return kExitBadInput;
    }
    const cct::FockConfig cfg{opt.cutoff};
    cfg.validate();
    const double t = opt.time;
    const auto h = cct::fock_hamiltonian(opt.params, cfg);
    const cct::TransferCoefficients tc = cct::transfer_coefficients(opt.params, t);
    bool ok = true;

    // One-excitation sector against the 6x6 propagator.
    {
        const Eigen::MatrixXcd u = cct::propagator(
            cct::build_system_matrix(opt.params), t).u;
        double dev = 0.0;
        for (int j = 0; j < cct::kNumModes; ++j) {
            cct::FockState basis;
            basis.cutoff = cfg.cutoff;
            basis.amps = Eigen::VectorXcd::Zero(cfg.dim());
            long stride = 1;
            for (int k = 0; k < cct::kNumModes - 1 - j; ++k) {
                stride *= cfg.cutoff + 1;
            }
            basis.amps(stride) = 1.0;
            const cct::FockState evolved = cct::fock_evolve(basis, h, t);
            for (int i = 0; i < cct::kNumModes; ++i) {
                long stride_i = 1;
                for (int k = 0; k < cct::kNumModes - 1 - i; ++k) {
                    stride_i *= cfg.cutoff + 1;
                }
                dev = std::max(dev, std::abs(evolved.amps(stride_i) - u(i, j)));
            }
        }
        const bool pass = dev <= 1e-8;
        ok = ok && pass;
        std::cout << (pass ? "PASS" : "FAIL")
                  << " single_excitation_sector max_dev=" << cct::format_g17(dev)
                  << " tolerance=1e-08\n";
    }

    const cct::Complex alpha(opt.alpha, 0.0);

    // Per-mode photon expectations of one coherent branch.
    cct::FockState branch_plus;
    {
        std::array<cct::Complex, cct::kNumModes> alphas{};
        alphas[cct::B1] = alpha;
        branch_plus = cct::product_coherent_state(alphas, cfg);
        const cct::FockState evolved = cct::fock_evolve(branch_plus, h, t);
        double dev = 0.0;
        for (int j = 0; j < cct::kNumModes; ++j) {
            const double expected = std::norm(alpha * tc.u[j]);
            const double measured = cct::fock_expectation_number(
                evolved, static_cast<cct::ModeIndex>(j));
            dev = std::max(dev, std::abs(expected - measured));
        }
        const bool pass = dev <= 1e-4;
        ok = ok && pass;
        std::cout << (pass ? "PASS" : "FAIL")
                  << " branch_amplitudes max_dev=" << cct::format_g17(dev)
                  << " tolerance=0.0001\n";
    }

    // Mean photon number of the full qubit state against the closed form,
    // and raw transfer fidelity against the overlap formula.
    {
        const cct::CoherentQubit q = make_qubit(opt);
        const double n_alpha = cct::qubit_normalization(q);
        std::array<cct::Complex, cct::kNumModes> minus{};
        minus[cct::B1] = -alpha;
        const cct::FockState branch_minus = cct::product_coherent_state(minus, cfg);
        cct::FockState qubit_state;
        qubit_state.cutoff = cfg.cutoff;
        qubit_state.amps = (q.mu * branch_plus.amps + q.nu * branch_minus.amps) /
                           std::sqrt(n_alpha);
        const cct::FockState evolved = cct::fock_evolve(qubit_state, h, t);

        double cavity_total = 0.0;
        for (int site = 0; site < 3; ++site) {
            cavity_total += cct::fock_expectation_number(
                evolved, static_cast<cct::ModeIndex>(2 * site));
        }
        const double expected = cct::avg_photon_number(q, opt.params, t);
        const double dev_n = std::abs(cavity_total - expected);
        const bool pass_n = dev_n <= 2e-3;
        ok = ok && pass_n;
        std::cout << (pass_n ? "PASS" : "FAIL")
                  << " mean_photon_number dev=" << cct::format_g17(dev_n)
                  << " tolerance=0.002\n";

        std::array<cct::Complex, cct::kNumModes> target_plus{};
        target_plus[cct::B3] = alpha;
        std::array<cct::Complex, cct::kNumModes> target_minus{};
        target_minus[cct::B3] = -alpha;
        cct::FockState target;
        target.cutoff = cfg.cutoff;
        target.amps = (q.mu * cct::product_coherent_state(target_plus, cfg).amps +
                       q.nu * cct::product_coherent_state(target_minus, cfg).amps) /
                      std::sqrt(n_alpha);
        const double fock_fid = std::norm(cct::fock_overlap(target, evolved));
        const double formula_fid =
            cct::qubit_transfer_fidelity(q, opt.params, t, false);
        const double dev_f = std::abs(fock_fid - formula_fid);
        const bool pass_f = dev_f <= 1e-3;
        ok = ok && pass_f;
        std::cout << (pass_f ? "PASS" : "FAIL")
                  << " transfer_fidelity dev=" << cct::format_g17(dev_f)
                  << " tolerance=0.001\n";
    }

    return ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherent-qubit transfer through a three-cavity chain"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* simulate =
        app.add_subcommand("simulate", "Write population trajectory CSV");
    add_param_flags(simulate, opt);
    simulate->add_option("--t-max", opt.t_max, "End of the time grid");
    simulate->add_option("--points", opt.points, "Grid points (default: auto)");
    simulate->add_option("--out", opt.out, "Output CSV path (default: stdout)");
    simulate->add_option("--svg", opt.svg, "Optional SVG plot path");

    CLI::App* find_tstar =
        app.add_subcommand("find-tstar", "Locate the transfer time");
    add_param_flags(find_tstar, opt);
    find_tstar->add_option("--window-lo", opt.window_lo, "Search window start");
    find_tstar->add_option("--window-hi", opt.window_hi, "Search window end");
    find_tstar->add_option("--rel-tol", opt.rel_tol, "Relative tolerance on t*");

    CLI::App* fidelity =
        app.add_subcommand("fidelity", "Qubit transfer fidelity at a time");
    add_param_flags(fidelity, opt);
    add_qubit_flags(fidelity, opt);
    fidelity->add_option("--time", opt.time, "Evaluation time");

    CLI::App* sweep = app.add_subcommand("sweep", "Detuning design sweep CSV");
    add_param_flags(sweep, opt);
    sweep->add_option("--delta-from", opt.delta_from, "Grid start");
    sweep->add_option("--delta-to", opt.delta_to, "Grid end");
    sweep->add_option("--delta-step", opt.delta_step, "Grid step");
    sweep->add_option("--pop-cap", opt.pop_cap, "Cavity population cap");
    sweep->add_option("--window-lo", opt.window_lo, "Search window start");
    sweep->add_option("--window-hi", opt.window_hi, "Search window end");
    sweep->add_option("--rel-tol", opt.rel_tol, "Relative tolerance on t*");
    sweep->add_option("--out", opt.out, "Output CSV path (default: stdout)");

    CLI::App* validate =
        app.add_subcommand("validate", "Randomized invariant suites");
    validate->add_option("--seed", opt.seed, "RNG seed");
    validate->add_option("--trials", opt.trials, "Number of random samples")
        ->check(CLI::NonNegativeNumber);
    validate->add_flag("--include-as-printed-eq10", opt.include_as_printed_eq10,
                       "Also demonstrate the published coefficient misprint");
    validate->add_option("--config", opt.config_path,
                         "Plain key = value config file; flags override");

    CLI::App* oracle =
        app.add_subcommand("oracle", "Truncated Fock-space cross-checks");
    add_param_flags(oracle, opt);
    add_qubit_flags(oracle, opt);
    oracle->add_option("--time", opt.time, "Evaluation time");
    oracle->add_option("--cutoff", opt.cutoff, "Per-mode occupation cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (!opt.config_path.empty()) {
            CLI::App* active = app.get_subcommands().front();
            const int rc = apply_config(active, opt);
            if (rc != kExitOk) {
                return rc;
            }
        }
        if (simulate->parsed()) return run_simulate(opt);
        if (find_tstar->parsed()) return run_find_tstar(opt);
        if (fidelity->parsed()) return run_fidelity(opt);
        if (sweep->parsed()) return run_sweep(opt);
        if (validate->parsed()) return run_validate(opt);
        if (oracle->parsed()) return run_oracle(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitOk;
}
