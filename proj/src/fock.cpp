#include "cct/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace cct {

namespace {

long ipow(long base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

// Place value of `mode` in the base-(cutoff+1) index (a1 most significant).
long mode_stride(int cutoff, int mode) {
    return ipow(cutoff + 1, kNumModes - 1 - mode);
}

int total_excitations(const FockConfig& cfg, long index) {
    int total = 0;
    for (int mode = 0; mode < kNumModes; ++mode) {
        total += fock_occupation(cfg, index, mode);
    }
    return total;
}

}  // namespace

long FockConfig::dim() const {
    return ipow(cutoff + 1, kNumModes);
}

void FockConfig::validate() const {
    if (cutoff < 1) {
        throw std::invalid_argument("FockConfig: cutoff must be >= 1");
    }
    if (dim() > kDimBudget) {
        throw std::invalid_argument(
            "FockConfig: Hilbert dimension (cutoff+1)^6 exceeds the budget of " +
            std::to_string(kDimBudget));
    }
}

int fock_occupation(const FockConfig& cfg, long index, int mode) {
    return static_cast<int>(index / mode_stride(cfg.cutoff, mode)) % (cfg.cutoff + 1);
}

std::vector<long> fock_sector_indices(const FockConfig& cfg, int total) {
    cfg.validate();
    std::vector<long> out;
    for (long i = 0; i < cfg.dim(); ++i) {
        if (total_excitations(cfg, i) == total) {
            out.push_back(i);
        }
    }
    return out;
}

Eigen::SparseMatrix<double> fock_hamiltonian(const ModelParams& params,
                                             const FockConfig& cfg) {
    params.validate();
    cfg.validate();
    const long dim = cfg.dim();
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<std::size_t>(dim) * 6);

    // Hopping term strength and endpoints, in ModeIndex labels. Each entry
    // moves one quantum from `from` to `to`; the conjugate is added too.
    struct Hop {
        int from;
        int to;
        double strength;
    };
    const Hop hops[] = {
        {A1, B1, params.g}, {A2, B2, params.g}, {A3, B3, params.g},
        {A1, A2, params.c}, {A2, A3, params.c},
    };

    for (long i = 0; i < dim; ++i) {
        double diag = 0.0;
        for (int site = 0; site < 3; ++site) {
            diag += params.omega * fock_occupation(cfg, i, 2 * site);
            diag += (params.omega - params.delta) * fock_occupation(cfg, i, 2 * site + 1);
        }
        if (diag != 0.0) {
            triplets.emplace_back(i, i, diag);
        }
        for (const Hop& hop : hops) {
            if (hop.strength == 0.0) {
                continue;
            }
            const int n_from = fock_occupation(cfg, i, hop.from);
            const int n_to = fock_occupation(cfg, i, hop.to);
            if (n_from == 0 || n_to == cfg.cutoff) {
                continue;
            }
            const long j = i - mode_stride(cfg.cutoff, hop.from) +
                           mode_stride(cfg.cutoff, hop.to);
            const double element = hop.strength *
                                   std::sqrt(static_cast<double>(n_from)) *
                                   std::sqrt(static_cast<double>(n_to + 1));
            triplets.emplace_back(j, i, element);
            triplets.emplace_back(i, j, element);
        }
    }

    Eigen::SparseMatrix<double> h(dim, dim);
    h.setFromTriplets(triplets.begin(), triplets.end());
    return h;
}

Eigen::VectorXcd coherent_fock_vector(Complex alpha, const FockConfig& cfg) {
    cfg.validate();
    const double n_mean = std::norm(alpha);

    // Poisson tail beyond the cutoff must stay under 1e-8.
    double kept = 0.0;
    double term = std::exp(-n_mean);
    int minimal_cutoff = -1;
    for (int n = 0; n <= 4 * cfg.cutoff + 64; ++n) {
        kept += term;
        if (minimal_cutoff < 0 && 1.0 - kept < 1e-8) {
            minimal_cutoff = n;
        }
        term *= n_mean / static_cast<double>(n + 1);
    }
    if (minimal_cutoff < 0 || minimal_cutoff > cfg.cutoff) {
        throw std::invalid_argument(
            "coherent_fock_vector: Poisson tail beyond cutoff " +
            std::to_string(cfg.cutoff) + " exceeds 1e-8; minimal adequate cutoff is " +
            std::to_string(minimal_cutoff));
    }

    Eigen::VectorXcd v(cfg.cutoff + 1);
    Complex amp = std::exp(Complex(-0.5 * n_mean, 0.0));
    for (int n = 0; n <= cfg.cutoff; ++n) {
        v(n) = amp;
        amp *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    return v;
}

FockState product_coherent_state(const std::array<Complex, kNumModes>& alphas,
                                 const FockConfig& cfg) {
    cfg.validate();
    std::array<Eigen::VectorXcd, kNumModes> factors;
    for (int mode = 0; mode < kNumModes; ++mode) {
        factors[mode] = coherent_fock_vector(alphas[mode], cfg);
    }
    FockState state;
    state.cutoff = cfg.cutoff;
    state.amps.resize(cfg.dim());
    for (long i = 0; i < cfg.dim(); ++i) {
        Complex amp(1.0, 0.0);
        for (int mode = 0; mode < kNumModes; ++mode) {
            amp *= factors[mode](fock_occupation(cfg, i, mode));
        }
        state.amps(i) = amp;
    }
    return state;
}

FockState fock_evolve(const FockState& state,
                      const Eigen::SparseMatrix<double>& hamiltonian, double t) {
    if (state.amps.size() != hamiltonian.rows()) {
        throw std::invalid_argument("fock_evolve: state/operator dimension mismatch");
    }
    const FockConfig cfg{state.cutoff};
    if (cfg.dim() != state.amps.size()) {
        throw std::invalid_argument("fock_evolve: state cutoff inconsistent with size");
    }

    FockState out;
    out.cutoff = state.cutoff;
    out.amps = state.amps;

    const int max_total = kNumModes * cfg.cutoff;
    for (int total = 0; total <= max_total; ++total) {
        const std::vector<long> sector = fock_sector_indices(cfg, total);
        const auto n = static_cast<Eigen::Index>(sector.size());

        Eigen::VectorXcd block_amps(n);
        double sector_norm2 = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
            block_amps(k) = state.amps(sector[k]);
            sector_norm2 += std::norm(block_amps(k));
        }
        // Empty sectors only pick up a phase on (numerically) zero
        // amplitude; leaving them costs < 2e-16 in 2-norm each.
        if (sector_norm2 < 1e-32) {
            continue;
        }

        Eigen::MatrixXd block(n, n);
        for (Eigen::Index col = 0; col < n; ++col) {
            for (Eigen::Index row = 0; row < n; ++row) {
                block(row, col) = hamiltonian.coeff(sector[row], sector[col]);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block);
        Eigen::VectorXcd phases(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            phases(k) = std::exp(Complex(0.0, -es.eigenvalues()(k) * t));
        }
        const Eigen::VectorXcd evolved =
            es.eigenvectors().cast<Complex>() *
            (phases.asDiagonal() *
             (es.eigenvectors().transpose().cast<Complex>() * block_amps));
        for (Eigen::Index k = 0; k < n; ++k) {
            out.amps(sector[k]) = evolved(k);
        }
    }
    return out;
}

double fock_expectation_number(const FockState& state, ModeIndex mode) {
    const FockConfig cfg{state.cutoff};
    double sum = 0.0;
    for (long i = 0; i < state.amps.size(); ++i) {
        sum += fock_occupation(cfg, i, mode) * std::norm(state.amps(i));
    }
    return sum;
}

Complex fock_overlap(const FockState& s1, const FockState& s2) {
    if (s1.amps.size() != s2.amps.size()) {
        throw std::invalid_argument("fock_overlap: dimension mismatch");
    }
    return s1.amps.dot(s2.amps);  // Eigen's dot conjugates the left argument
}

}  // namespace cct
