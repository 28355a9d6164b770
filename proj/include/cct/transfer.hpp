#pragma once

#include <utility>
#include <vector>

#include "cct/analytic.hpp"
#include "cct/coherent.hpp"

namespace cct {

// Population curves on a uniform time grid: cavity weight F_pop plus the
// three exciton populations U2, U4, U6. Row sums are 1 at every point.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> f_pop;
    std::vector<double> u2;
    std::vector<double> u4;
    std::vector<double> u6;
};

struct TimeWindow {
    double lo = 0.0;
    double hi = 0.0;
};

struct TransferResult {
    double t_star = 0.0;    // maximizer of |u6|^2 in the search window
    double quality = 0.0;   // |u6(t_star)|^2
    double phase = 0.0;     // arg u6(t_star) in (-pi, pi]
    double max_f_pop = 0.0; // grid maximum of F_pop over [0, t_star]
};

// OpenMP-parallel grid evaluation; bitwise identical to the serial version
// (each point is independent).
Trajectory population_trajectory(const ModelParams& params, double t_max,
                                 int n_points);

// Serial reference implementation, kept for testing and benchmarking.
Trajectory population_trajectory_serial(const ModelParams& params, double t_max,
                                        int n_points);

// |u1|^2 + |u3|^2 + |u5|^2: total weight sitting in the cavity field modes.
double cavity_population_factor(const ModelParams& params, double t);

// Mean total cavity photon number of the evolved qubit state:
// |alpha|^2 (|mu|^2 + |nu|^2 - 2 Re(mu conj(nu)) e^{-2|alpha|^2}) F_pop / N.
double avg_photon_number(const CoherentQubit& q, const ModelParams& params,
                         double t);

// Locates the global maximum of |u6(t)|^2 over the window: dense coarse scan
// with step pi / (10 max(a, b, f)), then golden-section refinement of the
// bracketed best sample until the bracket is below rel_tol * t.
// max_f_pop is the maximum of F_pop over the coarse grid restricted to
// [0, t_star] plus the refined point (a grid maximum, not a certified one).
TransferResult find_transfer_time(const ModelParams& params, TimeWindow window,
                                  double rel_tol);

// Overlap fidelity between the evolved qubit state (each branch a product of
// coherent states with amplitudes alpha * u_j) and the target qubit sitting
// on mode b3. With phase_corrected the target amplitude is rotated by
// arg(u6(t)), reporting fidelity up to the known residual logical rotation.
double qubit_transfer_fidelity(const CoherentQubit& q, const ModelParams& params,
                               double t, bool phase_corrected);

// For each detuning in the grid, finds the transfer time in the window and
// keeps entries whose max_f_pop stays at or below pop_cap. Result is sorted
// by ascending t_star; an empty result is not an error. Grid points are
// evaluated in parallel; output is deterministic.
std::vector<std::pair<double, TransferResult>> design_search(
    double g, double c, const std::vector<double>& delta_grid, double pop_cap,
    TimeWindow window);

}  // namespace cct
