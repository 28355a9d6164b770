#include "cct/coherent.hpp"

#include <cmath>
#include <stdexcept>

namespace cct {

double qubit_normalization(const CoherentQubit& q) {
    const double cross =
        2.0 * std::real(q.mu * std::conj(q.nu)) * std::exp(-2.0 * std::norm(q.alpha));
    const double n = std::norm(q.mu) + std::norm(q.nu) + cross;
    if (!(n > 1e-12)) {
        throw std::invalid_argument(
            "qubit_normalization: degenerate coherent qubit (normalization <= 1e-12)");
    }
    return n;
}

Complex coherent_overlap(Complex beta, Complex gamma) {
    return std::exp(-0.5 * std::norm(beta) - 0.5 * std::norm(gamma) +
                    std::conj(beta) * gamma);
}

BranchAmplitudes branch_amplitudes(Complex alpha,
                                   const std::array<Complex, kNumModes>& row) {
    double sum = 0.0;
    for (const Complex& r : row) {
        sum += std::norm(r);
    }
    if (std::abs(sum - 1.0) > 1e-8) {
        throw std::invalid_argument(
            "branch_amplitudes: row is not normalized to 1 within 1e-8");
    }
    BranchAmplitudes out;
    for (int j = 0; j < kNumModes; ++j) {
        out.amps[j] = alpha * row[j];
    }
    return out;
}

}  // namespace cct
