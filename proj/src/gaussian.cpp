#include "gmc/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gmc/mode_map.hpp"

namespace gmc {

GaussianState::GaussianState(Eigen::VectorXd mean_, Eigen::MatrixXd cov_)
    : mean(std::move(mean_)), cov(std::move(cov_)) {
    if (mean.size() < 2 || mean.size() % 2 != 0) {
        throw std::invalid_argument("GaussianState: mean must have even length >= 2");
    }
    if (cov.rows() != mean.size() || cov.cols() != mean.size()) {
        throw std::invalid_argument("GaussianState: covariance size mismatch");
    }
    if (!mean.allFinite() || !cov.allFinite()) {
        throw std::invalid_argument("GaussianState: non-finite moments");
    }
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("GaussianState: covariance must be symmetric");
    }
}

Eigen::VectorXd GaussianState::symplectic_eigenvalues() const {
    const Eigen::MatrixXd jv = symplectic_form(modes()) * cov;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(jv, /*computeEigenvectors=*/false);
    std::vector<double> moduli(jv.rows());
    for (Eigen::Index i = 0; i < jv.rows(); ++i) {
        moduli[i] = std::abs(solver.eigenvalues()(i));
    }
    std::sort(moduli.begin(), moduli.end());
    // eigenvalues come in +-i nu pairs; keep one modulus per pair
    Eigen::VectorXd nu(modes());
    for (int k = 0; k < modes(); ++k) {
        nu(k) = moduli[2 * k];
    }
    return nu;
}

bool GaussianState::is_physical(double tol) const {
    return symplectic_eigenvalues().minCoeff() >= 0.5 - tol;
}

GaussianState coherent_state(double alpha_re, double alpha_im) {
    Eigen::VectorXd mean(2);
    mean << std::sqrt(2.0) * alpha_re, std::sqrt(2.0) * alpha_im;
    return GaussianState(mean, 0.5 * Eigen::MatrixXd::Identity(2, 2));
}

GaussianState tmsv_state(double mu) {
    if (!(mu >= 0.0 && mu < 1.0)) {
        throw std::invalid_argument("tmsv_state: mu must lie in [0, 1)");
    }
    const double cosh2r = (1.0 + mu * mu) / (1.0 - mu * mu);
    const double sinh2r = 2.0 * mu / (1.0 - mu * mu);
    Eigen::Matrix2d z = Eigen::Vector2d(1.0, -1.0).asDiagonal();
    Eigen::MatrixXd cov(4, 4);
    cov.topLeftCorner(2, 2) = 0.5 * cosh2r * Eigen::Matrix2d::Identity();
    cov.bottomRightCorner(2, 2) = 0.5 * cosh2r * Eigen::Matrix2d::Identity();
    cov.topRightCorner(2, 2) = 0.5 * sinh2r * z;
    cov.bottomLeftCorner(2, 2) = 0.5 * sinh2r * z;
    return GaussianState(Eigen::VectorXd::Zero(4), cov);
}

GaussianState thermal_state(double thermal, int modes) {
    if (thermal < 0.0) {
        throw std::invalid_argument("thermal_state: occupation must be >= 0");
    }
    if (modes < 1) {
        throw std::invalid_argument("thermal_state: mode count must be >= 1");
    }
    return GaussianState(Eigen::VectorXd::Zero(2 * modes),
                         (thermal + 0.5) * Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

GaussianState apply_triad(const GaussianState& state, const ChannelTriad& triad) {
    if (state.modes() != 1) {
        throw std::invalid_argument("apply_triad: expected a single-mode state");
    }
    Eigen::VectorXd mean = triad.x * state.mean + triad.d;
    Eigen::MatrixXd cov = triad.x * state.cov * triad.x.transpose() + triad.y;
    return GaussianState(std::move(mean), std::move(cov));
}

GaussianState apply_triad_to_half(const GaussianState& state, const ChannelTriad& triad) {
    if (state.modes() != 2) {
        throw std::invalid_argument("apply_triad_to_half: expected a two-mode state");
    }
    if (!triad.x_is_scalar()) {
        throw std::invalid_argument(
            "apply_triad_to_half: fast path needs x = zeta * I; "
            "propagate the full scene instead");
    }
    const double zeta = triad.scalar_gain();
    Eigen::VectorXd mean = state.mean;
    mean.head(2) = zeta * state.mean.head(2) + triad.d;
    Eigen::MatrixXd cov = state.cov;
    cov.topLeftCorner(2, 2) = zeta * zeta * state.cov.topLeftCorner(2, 2) + triad.y;
    cov.topRightCorner(2, 2) *= zeta;
    cov.bottomLeftCorner(2, 2) *= zeta;
    return GaussianState(std::move(mean), std::move(cov));
}

}  // namespace gmc
