#pragma once

#include <array>

#include "cct/model.hpp"

namespace cct {

// Logical qubit mu|alpha> + nu|-alpha> living on one bosonic mode.
struct CoherentQubit {
    Complex alpha;
    Complex mu;
    Complex nu;
};

// Normalization factor |mu|^2 + |nu|^2 + 2 Re(mu conj(nu)) e^{-2|alpha|^2}.
// Throws std::invalid_argument when the state is numerically null
// (factor <= 1e-12, e.g. mu = -nu with alpha = 0).
double qubit_normalization(const CoherentQubit& q);

// <beta|gamma> = exp(-|beta|^2/2 - |gamma|^2/2 + conj(beta) gamma).
Complex coherent_overlap(Complex beta, Complex gamma);

// Per-mode coherent amplitudes of one superposition branch after linear
// evolution: mode j holds alpha * row_j.
struct BranchAmplitudes {
    std::array<Complex, kNumModes> amps;
};

// row must satisfy sum |row_j|^2 = 1 within 1e-8 (it is a b1 row of a
// unitary); otherwise the branch would not conserve |alpha|^2.
BranchAmplitudes branch_amplitudes(Complex alpha,
                                   const std::array<Complex, kNumModes>& row);

}  // namespace cct
