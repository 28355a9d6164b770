#include "cct/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cct {

namespace {

double u6_population(const ModelParams& params, double t) {
    return std::norm(transfer_coefficients(params, t).u[B3]);
}

// Coarse scan step: ten samples per half-period of the fastest Rabi
// oscillation, so no |u6|^2 peak can slip between samples.
double scan_step(const ModelParams& params, double span) {
    const auto [a, b, f] = rabi_frequencies(params);
    const double fastest = std::max({a, b, f});
    if (fastest <= 0.0) {
        return span / 1000.0;  // static dynamics; grid density is moot
    }
    return std::numbers::pi / (10.0 * fastest);
}

// Golden-section maximization of fn on [lo, hi], terminating when the
// bracket is below tol_abs.
template <typename F>
double golden_max(F&& fn, double lo, double hi, double tol_abs) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = fn(x1);
    double f2 = fn(x2);
    while (hi - lo > tol_abs) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = fn(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = fn(x1);
        }
    }
    return 0.5 * (lo + hi);
}

Trajectory make_trajectory_grid(const ModelParams& params, double t_max,
                                int n_points, bool parallel) {
    params.validate();
    if (!(t_max > 0.0) || n_points < 2) {
        throw std::invalid_argument(
            "population_trajectory: need t_max > 0 and at least 2 points");
    }
    Trajectory traj;
    traj.times.resize(n_points);
    traj.f_pop.resize(n_points);
    traj.u2.resize(n_points);
    traj.u4.resize(n_points);
    traj.u6.resize(n_points);
    const double dt = t_max / static_cast<double>(n_points - 1);

#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < n_points; ++i) {
        const double t = dt * static_cast<double>(i);
        const TransferCoefficients tc = transfer_coefficients(params, t);
        traj.times[i] = t;
        traj.f_pop[i] =
            std::norm(tc.u[A1]) + std::norm(tc.u[A2]) + std::norm(tc.u[A3]);
        traj.u2[i] = std::norm(tc.u[B1]);
        traj.u4[i] = std::norm(tc.u[B2]);
        traj.u6[i] = std::norm(tc.u[B3]);
    }
    return traj;
}

}  // namespace

Trajectory population_trajectory(const ModelParams& params, double t_max,
                                 int n_points) {
    return make_trajectory_grid(params, t_max, n_points, true);
}

Trajectory population_trajectory_serial(const ModelParams& params, double t_max,
                                        int n_points) {
    return make_trajectory_grid(params, t_max, n_points, false);
}

double cavity_population_factor(const ModelParams& params, double t) {
    const TransferCoefficients tc = transfer_coefficients(params, t);
    return std::norm(tc.u[A1]) + std::norm(tc.u[A2]) + std::norm(tc.u[A3]);
}

double avg_photon_number(const CoherentQubit& q, const ModelParams& params,
                         double t) {
    const double n_alpha = qubit_normalization(q);  // rejects degenerate qubits
    const double cross =
        2.0 * std::real(q.mu * std::conj(q.nu)) * std::exp(-2.0 * std::norm(q.alpha));
    const double numerator =
        std::norm(q.alpha) * (std::norm(q.mu) + std::norm(q.nu) - cross);
    return numerator * cavity_population_factor(params, t) / n_alpha;
}

TransferResult find_transfer_time(const ModelParams& params, TimeWindow window,
                                  double rel_tol) {
    params.validate();
    if (!(window.lo >= 0.0) || !(window.hi > window.lo)) {
        throw std::invalid_argument("find_transfer_time: invalid window");
    }
    if (!(rel_tol > 0.0) || rel_tol > 1e-2) {
        throw std::invalid_argument("find_transfer_time: rel_tol must be in (0, 1e-2]");
    }

    const double span = window.hi - window.lo;
    const double step = scan_step(params, span);
    const long n = std::max(2L, static_cast<long>(std::ceil(span / step)) + 1);
    const double dt = span / static_cast<double>(n - 1);

    // Dense scan of |u6|^2 over the window. Values are stored per index so
    // the argmax (and the thread count) cannot affect the result.
    std::vector<double> values(n);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        values[i] = u6_population(params, window.lo + dt * static_cast<double>(i));
    }
    long best = 0;
    for (long i = 1; i < n; ++i) {
        if (values[i] > values[best]) {
            best = i;
        }
    }

    const double t_best = window.lo + dt * static_cast<double>(best);
    const double lo = std::max(window.lo, t_best - dt);
    const double hi = std::min(window.hi, t_best + dt);
    const double tol_abs = std::max(rel_tol * std::max(t_best, dt), 1e-300);
    const double t_star =
        golden_max([&](double t) { return u6_population(params, t); }, lo, hi,
                   tol_abs);

    TransferResult result;
    result.t_star = t_star;
    const TransferCoefficients tc = transfer_coefficients(params, t_star);
    result.quality = std::norm(tc.u[B3]);
    result.phase = std::arg(tc.u[B3]);

    double max_f = cavity_population_factor(params, t_star);
#pragma omp parallel for schedule(static) reduction(max : max_f)
    for (long i = 0; i <= best; ++i) {
        const double f =
            cavity_population_factor(params, window.lo + dt * static_cast<double>(i));
        max_f = std::max(max_f, f);
    }
    // F_pop on [0, t_star] includes the stretch before the window opens.
    if (window.lo > 0.0) {
        const long m = static_cast<long>(std::ceil(window.lo / dt)) + 1;
        const double dt0 = window.lo / static_cast<double>(m);
#pragma omp parallel for schedule(static) reduction(max : max_f)
        for (long i = 0; i <= m; ++i) {
            const double f =
                cavity_population_factor(params, dt0 * static_cast<double>(i));
            max_f = std::max(max_f, f);
        }
    }
    result.max_f_pop = max_f;
    return result;
}

double qubit_transfer_fidelity(const CoherentQubit& q, const ModelParams& params,
                               double t, bool phase_corrected) {
    const double n_alpha = qubit_normalization(q);
    const TransferCoefficients tc = transfer_coefficients(params, t);
    const BranchAmplitudes evolved = branch_amplitudes(q.alpha, tc.u);

    Complex target_alpha = q.alpha;
    if (phase_corrected) {
        target_alpha *= std::exp(Complex(0.0, std::arg(tc.u[B3])));
    }

    // <target branch s | evolved branch r>: modes other than b3 hold vacuum
    // on the target side, so the product of per-mode overlaps collapses to
    // six coherent_overlap factors.
    const auto branch_overlap = [&](double target_sign, double evolved_sign) {
        Complex prod(1.0, 0.0);
        for (int j = 0; j < kNumModes; ++j) {
            const Complex tgt = (j == B3) ? target_sign * target_alpha : Complex(0.0);
            prod *= coherent_overlap(tgt, evolved_sign * evolved.amps[j]);
        }
        return prod;
    };

    const Complex overlap =
        (std::conj(q.mu) * q.mu * branch_overlap(+1.0, +1.0) +
         std::conj(q.mu) * q.nu * branch_overlap(+1.0, -1.0) +
         std::conj(q.nu) * q.mu * branch_overlap(-1.0, +1.0) +
         std::conj(q.nu) * q.nu * branch_overlap(-1.0, -1.0)) /
        n_alpha;
    return std::min(std::norm(overlap), 1.0);
}

std::vector<std::pair<double, TransferResult>> design_search(
    double g, double c, const std::vector<double>& delta_grid, double pop_cap,
    TimeWindow window) {
    if (delta_grid.empty()) {
        throw std::invalid_argument("design_search: empty detuning grid");
    }
    if (!(pop_cap > 0.0) || pop_cap > 1.0) {
        throw std::invalid_argument("design_search: pop_cap must be in (0, 1]");
    }

    const auto n = static_cast<long>(delta_grid.size());
    std::vector<TransferResult> results(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        ModelParams p{1.0, delta_grid[i], g, c};
        results[i] = find_transfer_time(p, window, 1e-4);
    }

    std::vector<std::pair<double, TransferResult>> feasible;
    for (long i = 0; i < n; ++i) {
        if (results[i].max_f_pop <= pop_cap) {
            feasible.emplace_back(delta_grid[i], results[i]);
        }
    }
    std::stable_sort(feasible.begin(), feasible.end(),
                     [](const auto& lhs, const auto& rhs) {
                         return lhs.second.t_star < rhs.second.t_star;
                     });
    return feasible;
}

}  // namespace cct
