#include "gmc/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "gmc/mode_map.hpp"

namespace gmc {

FidelityResult gaussian_fidelity(const GaussianState& input, const ChannelTriad& triad) {
    if (input.modes() != 1) {
        throw std::invalid_argument("gaussian_fidelity: expected a single-mode input");
    }
    const double least = input.symplectic_eigenvalues().minCoeff();
    if (std::abs(least - 0.5) > 1e-9) {
        throw std::invalid_argument("gaussian_fidelity: input must be pure");
    }

    const GaussianState output = apply_triad(input, triad);
    const Eigen::Matrix2d sum = input.cov + output.cov;
    const double det = sum.determinant();
    if (!(det > 1e-300)) {
        throw std::domain_error("gaussian_fidelity: singular V_in + V_out");
    }
    const Eigen::Vector2d delta =
        (triad.x - Eigen::Matrix2d::Identity()) * input.mean.head<2>() + triad.d;
    const double exponent = -0.5 * delta.dot(sum.inverse() * delta);

    FidelityResult result;
    result.value = std::exp(exponent) / std::sqrt(det);
    return result;
}

FidelityResult transmission_fidelity(const ChannelParams& params, std::complex<double> alpha) {
    FidelityResult result =
        gaussian_fidelity(coherent_state(alpha.real(), alpha.imag()), effective_triad(params));
    result.params = params;
    result.alpha = alpha;
    return result;
}

namespace {

double least_ppt_eigenvalue_spectrum(const Eigen::MatrixXd& v_tilde) {
    const Eigen::MatrixXd jv = symplectic_form(2) * v_tilde;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(jv, /*computeEigenvectors=*/false);
    double least = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < jv.rows(); ++i) {
        least = std::min(least, std::abs(solver.eigenvalues()(i)));
    }
    return least;
}

double least_ppt_eigenvalue_closed_form(const Eigen::MatrixXd& v_tilde) {
    const double det_a = v_tilde.topLeftCorner(2, 2).determinant();
    const double det_b = v_tilde.bottomRightCorner(2, 2).determinant();
    const double det_c = v_tilde.topRightCorner(2, 2).determinant();
    const double det_v = v_tilde.determinant();
    const double delta = det_a + det_b + 2.0 * det_c;
    double disc = delta * delta - 4.0 * det_v;
    if (disc < 0.0) {
        if (disc < -1e-9 * std::max(1.0, delta * delta)) {
            throw std::domain_error("ppt_least_eigenvalue: negative discriminant");
        }
        disc = 0.0;
    }
    const double d_sq = 0.5 * (delta - std::sqrt(disc));
    return std::sqrt(std::max(d_sq, 0.0));
}

}  // namespace

EntanglementResult ppt_least_eigenvalue(const GaussianState& two_mode_state) {
    if (two_mode_state.modes() != 2) {
        throw std::invalid_argument("ppt_least_eigenvalue: expected a two-mode state");
    }
    if (!two_mode_state.is_physical(1e-8)) {
        throw std::invalid_argument("ppt_least_eigenvalue: unphysical covariance");
    }
    // partial transposition = momentum reflection on mode B
    Eigen::Vector4d reflect(1.0, 1.0, 1.0, -1.0);
    const Eigen::MatrixXd v_tilde =
        reflect.asDiagonal() * two_mode_state.cov * reflect.asDiagonal();

    const double closed = least_ppt_eigenvalue_closed_form(v_tilde);
    const double spectral = least_ppt_eigenvalue_spectrum(v_tilde);
    if (std::abs(closed - spectral) > 1e-10) {
        throw std::runtime_error("ppt_least_eigenvalue: closed form and spectrum disagree");
    }

    EntanglementResult result;
    result.d_minus = closed;
    // the boundary d_minus == 1/2 (e.g. a product of vacua) is separable
    result.separable = closed >= 0.5;
    return result;
}

EntanglementResult entanglement_survival(const ChannelParams& params, double mu) {
    return ppt_least_eigenvalue(apply_triad_to_half(tmsv_state(mu), effective_triad(params)));
}

}  // namespace gmc
