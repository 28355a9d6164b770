#include "cct/model.hpp"

#include <cmath>
#include <stdexcept>

namespace cct {

void ModelParams::validate() const {
    if (!std::isfinite(omega) || !std::isfinite(delta) || !std::isfinite(g) ||
        !std::isfinite(c)) {
        throw std::invalid_argument("ModelParams: all parameters must be finite");
    }
    if (g < 0.0 || c < 0.0) {
        throw std::invalid_argument("ModelParams: g and c must be nonnegative");
    }
}

SystemMatrix build_system_matrix(const ModelParams& params, int n_sites) {
    params.validate();
    if (n_sites < 1) {
        throw std::invalid_argument("build_system_matrix: need at least one site");
    }
    const int n = 2 * n_sites;
    SystemMatrix m = SystemMatrix::Zero(n, n);
    for (int site = 0; site < n_sites; ++site) {
        const int a = 2 * site;
        const int b = 2 * site + 1;
        m(a, a) = params.omega;
        m(b, b) = params.omega - params.delta;
        m(a, b) = m(b, a) = params.g;
        if (site + 1 < n_sites) {
            const int a_next = 2 * (site + 1);
            m(a, a_next) = m(a_next, a) = params.c;
        }
    }
    return m;
}

Propagator propagator(const SystemMatrix& m, double t) {
    if (!std::isfinite(t)) {
        throw std::invalid_argument("propagator: time must be finite");
    }
    // Shifting by the mean eigenvalue halves the spectral radius (the shift
    // comes back as one exact global phase), and a Rayleigh-quotient pass
    // squeezes the last few ulps out of the eigenvalues. Both matter at
    // large t, where phase errors grow linearly.
    const double shift = m.trace() / static_cast<double>(m.rows());
    const Eigen::MatrixXd shifted =
        m - shift * Eigen::MatrixXd::Identity(m.rows(), m.cols());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(shifted);
    const Eigen::MatrixXd& v = es.eigenvectors();
    const Complex global = std::exp(Complex(0.0, -shift * t));
    Eigen::VectorXcd phases(v.cols());
    for (Eigen::Index k = 0; k < v.cols(); ++k) {
        const double lambda = v.col(k).dot(shifted * v.col(k));
        phases(k) = global * std::exp(Complex(0.0, -lambda * t));
    }
    Propagator result;
    result.u = v.cast<Complex>() * phases.asDiagonal() *
               v.transpose().cast<Complex>();
    result.time = t;
    return result;
}

Eigen::VectorXcd propagator_row_b1(const SystemMatrix& m, double t) {
    return propagator(m, t).u.row(B1);
}

}  // namespace cct
