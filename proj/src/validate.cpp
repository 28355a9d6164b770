#include "cct/validate.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "cct/analytic.hpp"
#include "cct/transfer.hpp"

namespace cct {

namespace {

struct Sample {
    ModelParams params;
    double t;
};

std::string describe(const Sample& s) {
    std::ostringstream os;
    os << "omega=" << s.params.omega << " delta=" << s.params.delta
       << " g=" << s.params.g << " c=" << s.params.c << " t=" << s.t;
    return os.str();
}

std::vector<Sample> draw_samples(std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> omega_dist(0.0, 5.0);
    std::uniform_real_distribution<double> delta_dist(-1e3, 1e3);
    std::uniform_real_distribution<double> g_dist(0.0, 1e2);
    std::uniform_real_distribution<double> c_dist(0.0, 10.0);
    std::uniform_real_distribution<double> t_dist(0.0, 1e3);
    std::vector<Sample> samples(trials);
    for (Sample& s : samples) {
        s.params = ModelParams{omega_dist(rng), delta_dist(rng), g_dist(rng),
                               c_dist(rng)};
        s.t = t_dist(rng);
    }
    return samples;
}

}  // namespace

std::vector<SuiteResult> run_validation(const ValidationOptions& opts) {
    const std::vector<Sample> samples = draw_samples(opts.seed, opts.trials);
    std::vector<SuiteResult> results;

    {
        SuiteResult r{"normalization", true, 0.0, 1e-10, ""};
        for (const Sample& s : samples) {
            const double defect =
                unitarity_defect(transfer_coefficients(s.params, s.t));
            if (defect > r.worst) {
                r.worst = defect;
                if (defect > r.tolerance) {
                    r.passed = false;
                    r.detail = describe(s);
                }
            }
        }
        results.push_back(std::move(r));
    }

    {
        SuiteResult r{"analytic_vs_numeric", true, 0.0, 1e-9, ""};
        for (const Sample& s : samples) {
            const TransferCoefficients tc = transfer_coefficients(s.params, s.t);
            const Eigen::VectorXcd row =
                propagator_row_b1(build_system_matrix(s.params), s.t);
            for (int j = 0; j < kNumModes; ++j) {
                const double dev = std::abs(tc.u[j] - row(j));
                if (dev > r.worst) {
                    r.worst = dev;
                    if (dev > r.tolerance) {
                        r.passed = false;
                        r.detail = describe(s);
                    }
                }
            }
        }
        results.push_back(std::move(r));
    }

    {
        SuiteResult r{"propagator_unitarity", true, 0.0, 1e-11, ""};
        for (const Sample& s : samples) {
            const Propagator u = propagator(build_system_matrix(s.params), s.t);
            const double dev =
                (u.u * u.u.adjoint() -
                 Eigen::MatrixXcd::Identity(u.u.rows(), u.u.cols()))
                    .cwiseAbs()
                    .maxCoeff();
            if (dev > r.worst) {
                r.worst = dev;
                if (dev > r.tolerance) {
                    r.passed = false;
                    r.detail = describe(s);
                }
            }
        }
        results.push_back(std::move(r));
    }

    {
        // (delta, g, c) -> (s delta, s g, s c), t -> t/s keeps populations.
        SuiteResult r{"scaling_law", true, 0.0, 1e-10, ""};
        std::mt19937_64 rng(opts.seed ^ 0x5ca1ab1eULL);
        std::uniform_real_distribution<double> scale_dist(0.1, 10.0);
        for (const Sample& s : samples) {
            const double scale = scale_dist(rng);
            ModelParams scaled{s.params.omega, s.params.delta * scale,
                               s.params.g * scale, s.params.c * scale};
            const TransferCoefficients base = transfer_coefficients(s.params, s.t);
            const TransferCoefficients mapped =
                transfer_coefficients(scaled, s.t / scale);
            for (int j = 0; j < kNumModes; ++j) {
                const double dev =
                    std::abs(std::abs(base.u[j]) - std::abs(mapped.u[j]));
                if (dev > r.worst) {
                    r.worst = dev;
                    if (dev > r.tolerance) {
                        r.passed = false;
                        r.detail = describe(s);
                    }
                }
            }
        }
        results.push_back(std::move(r));
    }

    if (opts.include_as_printed_eq10) {
        // The published b1->b2 coefficient breaks normalization. At
        // (delta=0, g=65, c=1) the defect peaks near t = 1.1 at ~2.7e-3;
        // this suite passes when that defect is clearly visible.
        SuiteResult r{"as_printed_eq10_defect", false, 0.0, 1e-3, ""};
        const ModelParams p{1.0, 0.0, 65.0, 1.0};
        for (int i = 0; i <= 20000; ++i) {
            const double t = 20.0 * i / 20000.0;
            TransferCoefficients tc = transfer_coefficients(p, t);
            tc.u[B2] = as_printed_u14(p, t);
            const double defect = unitarity_defect(tc);
            if (defect > r.worst) {
                r.worst = defect;
                r.detail = "delta=0 g=65 c=1 t=" + std::to_string(t);
            }
        }
        r.passed = r.worst > r.tolerance;
        results.push_back(std::move(r));
    }

    return results;
}

}  // namespace cct
