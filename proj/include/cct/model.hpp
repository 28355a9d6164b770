#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cct {

using Complex = std::complex<double>;

inline constexpr int kNumModes = 6;

// Frozen mode ordering. Every matrix, coefficient vector and Fock basis in
// this project uses it: cavity a_i at even slots, exciton b_i at odd slots.
enum ModeIndex : int { A1 = 0, B1 = 1, A2 = 2, B2 = 3, A3 = 4, B3 = 5 };

// The four rates defining the chain Hamiltonian, all in units of the cavity
// frequency omega. g and c are kept nonnegative; a sign can always be moved
// into a mode phase.
struct ModelParams {
    double omega = 1.0;  // cavity frequency
    double delta = 0.0;  // exciton-cavity detuning (exciton sits at omega - delta)
    double g = 0.0;      // dot-cavity coupling
    double c = 0.0;      // inter-cavity photon hopping

    void validate() const;  // throws std::invalid_argument
};

// Real symmetric coefficient matrix M of the mode-amplitude equations
// dv/dt = -i M v with v = (a1, b1, a2, b2, a3, b3).
using SystemMatrix = Eigen::MatrixXd;

// U(t) = exp(-i M t). Unitary and complex symmetric (M is real symmetric).
struct Propagator {
    Eigen::MatrixXcd u;
    double time = 0.0;
};

// Builds M for an n_sites chain (uniform g, c; nearest-neighbour cavity
// hopping). All closed-form machinery elsewhere assumes n_sites == 3.
SystemMatrix build_system_matrix(const ModelParams& params, int n_sites = 3);

// Exact propagator via eigendecomposition of the real symmetric M.
Propagator propagator(const SystemMatrix& m, double t);

// Row of U(t) belonging to the first exciton mode b1. Since U is complex
// symmetric this row doubles as the Schroedinger-picture amplitude column
// out of b1.
Eigen::VectorXcd propagator_row_b1(const SystemMatrix& m, double t);

}  // namespace cct
