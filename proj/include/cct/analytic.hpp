#pragma once

#include <array>

#include "cct/model.hpp"

namespace cct {

// Rabi splittings of the three normal-mode blocks. The cavity chain has
// normal-mode shifts eps in {+sqrt(2)c, 0, -sqrt(2)c}; each block is a 2x2
// cavity/exciton problem with detuning delta + eps and splitting
// sqrt((delta + eps)^2 + 4 g^2).
struct RabiFrequencies {
    double a;  // eps = +sqrt(2) c block
    double b;  // eps = -sqrt(2) c block
    double f;  // eps = 0 block; equals 2g on resonance
};

RabiFrequencies rabi_frequencies(const ModelParams& params);

// The six closed-form amplitudes u_j(t) carried by mode b1 at time t,
// in ModeIndex order. Sum of squared moduli is 1 for all t.
struct TransferCoefficients {
    std::array<Complex, kNumModes> u;
    double time = 0.0;
};

TransferCoefficients transfer_coefficients(const ModelParams& params, double t);

// |sum_j |u_j|^2 - 1|.
double unitarity_defect(const TransferCoefficients& coeffs);

// Literal transcription of the published closed form for the b1->b2
// coefficient, whose inner sine coefficients read (2*delta + sqrt(2)c)/(4a)
// and (2*delta + sqrt(2)c)/(4b). That form breaks normalization; the
// corrected coefficients used by transfer_coefficients are
// sqrt(2)(delta + sqrt(2)c)/(4a) and sqrt(2)(delta - sqrt(2)c)/(4b).
// Kept only so tests can demonstrate the discrepancy.
Complex as_printed_u14(const ModelParams& params, double t);

}  // namespace cct
