#include "gmc/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gmc/mode_map.hpp"

namespace gmc {

namespace {

void place_mode_block(Eigen::MatrixXd& cov, int mode_a, int mode_b,
                      const Eigen::Matrix2d& block) {
    cov.block<2, 2>(2 * mode_a, 2 * mode_b) = block;
}

MultimodeGaussianScene blank_scene(const ChannelParams& params, bool has_idler) {
    MultimodeGaussianScene scene;
    scene.uses = params.uses;
    scene.has_idler = has_idler;
    const int dim = 2 * scene.modes();
    scene.mean = Eigen::VectorXd::Zero(dim);
    scene.cov = Eigen::MatrixXd::Zero(dim, dim);
    const Eigen::Matrix2d vacuum = 0.5 * Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d thermal = (params.thermal + 0.5) * Eigen::Matrix2d::Identity();
    for (int i = 0; i + 1 < params.uses; ++i) {
        place_mode_block(scene.cov, scene.aux_mode(i), scene.aux_mode(i), vacuum);
    }
    for (int i = 0; i < params.uses; ++i) {
        place_mode_block(scene.cov, scene.env_mode(i), scene.env_mode(i), thermal);
    }
    place_mode_block(scene.cov, scene.memory_mode(), scene.memory_mode(), vacuum);
    return scene;
}

}  // namespace

MultimodeGaussianScene make_scene(const ChannelParams& params, const GaussianState& signal) {
    if (signal.modes() != 1) {
        throw std::invalid_argument("make_scene: signal must be a single-mode state");
    }
    MultimodeGaussianScene scene = blank_scene(params, /*has_idler=*/false);
    scene.mean.head<2>() = signal.mean;
    scene.cov.topLeftCorner<2, 2>() = signal.cov;
    return scene;
}

MultimodeGaussianScene make_entangled_scene(const ChannelParams& params,
                                            const GaussianState& pair) {
    if (pair.modes() != 2) {
        throw std::invalid_argument("make_entangled_scene: pair must be a two-mode state");
    }
    MultimodeGaussianScene scene = blank_scene(params, /*has_idler=*/true);
    const int idler = scene.idler_mode();
    scene.mean.head<2>() = pair.mean.head<2>();
    scene.mean.segment<2>(2 * idler) = pair.mean.tail<2>();
    place_mode_block(scene.cov, 0, 0, pair.cov.topLeftCorner<2, 2>());
    place_mode_block(scene.cov, 0, idler, pair.cov.topRightCorner<2, 2>());
    place_mode_block(scene.cov, idler, 0, pair.cov.bottomLeftCorner<2, 2>());
    place_mode_block(scene.cov, idler, idler, pair.cov.bottomRightCorner<2, 2>());
    return scene;
}

GaussianState propagate_full_scene(const ChannelParams& params,
                                   const MultimodeGaussianScene& scene) {
    if (scene.uses != params.uses) {
        throw std::invalid_argument("propagate_full_scene: scene does not match params");
    }
    const int in_modes = 2 * params.uses + 1;
    if (scene.mean.size() != 2 * scene.modes()) {
        throw std::invalid_argument("propagate_full_scene: malformed scene");
    }

    const Eigen::RowVectorXd signal_row =
        compose_full_dilation(params).coefficients().row(0);
    const int out_modes = scene.has_idler ? 2 : 1;
    Eigen::MatrixXd restriction = Eigen::MatrixXd::Zero(out_modes, scene.modes());
    restriction.row(0).head(in_modes) = signal_row;
    if (scene.has_idler) {
        restriction(1, scene.idler_mode()) = 1.0;
    }

    const Eigen::MatrixXd lifted = lift_to_quadratures(ModeLinearMap(restriction));
    return GaussianState(lifted * scene.mean, lifted * scene.cov * lifted.transpose());
}

namespace {

// Nodes and weights for integrals against exp(-x^2), by Golub-Welsch on the
// Hermite Jacobi matrix; weights are normalized to sum to 1.
void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double off = std::sqrt(0.5 * k);
        jacobi(k - 1, k) = off;
        jacobi(k, k - 1) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = solver.eigenvalues()(i);
        const double first = solver.eigenvectors()(0, i);
        weights[i] = first * first;
    }
}

Eigen::VectorXcd coherent_vector(std::complex<double> alpha, int cutoff) {
    Eigen::VectorXcd vec(cutoff);
    vec(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < cutoff; ++n) {
        vec(n) = vec(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    }
    return vec;
}

// rho -> sum_k E_k rho E_k^dag for the pure-loss channel of transmissivity
// tau, with E_k |n> = sqrt(C(n,k) tau^(n-k) (1-tau)^k) |n-k>.
Eigen::MatrixXcd apply_pure_loss(const Eigen::MatrixXcd& rho, double tau) {
    const int dim = static_cast<int>(rho.rows());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<double> log_factorial(dim, 0.0);
    for (int n = 1; n < dim; ++n) {
        log_factorial[n] = log_factorial[n - 1] + std::log(static_cast<double>(n));
    }
    Eigen::VectorXd kraus_weights(dim);
    for (int k = 0; k < dim; ++k) {
        for (int n = k; n < dim; ++n) {
            const double log_binom =
                log_factorial[n] - log_factorial[k] - log_factorial[n - k];
            // pow handles the boundaries: 0^0 == 1 keeps tau in {0, 1} exact
            kraus_weights(n) = std::exp(0.5 * log_binom) *
                               std::pow(tau, 0.5 * (n - k)) *
                               std::pow(1.0 - tau, 0.5 * k);
        }
        const int span = dim - k;
        for (int row = 0; row < span; ++row) {
            for (int col = 0; col < span; ++col) {
                out(row, col) += kraus_weights(row + k) * kraus_weights(col + k) *
                                 rho(row + k, col + k);
            }
        }
    }
    return out;
}

// One quadrature axis of the classical-noise integral: conjugates rho by the
// displacement family exp(c G) with G eigendecomposed once. H = i G must be
// Hermitian so that exp(c G) = U exp(-i c L) U^dag stays unitary.
Eigen::MatrixXcd displace_average(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& h,
                                  double sigma, const std::vector<double>& nodes,
                                  const std::vector<double>& weights) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    const Eigen::MatrixXcd& u = solver.eigenvectors();
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    Eigen::MatrixXcd averaged = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double shift = sigma * nodes[i];          // quadrature displacement
        const double amplitude = shift / std::sqrt(2.0);
        Eigen::VectorXcd phase(lambda.size());
        for (Eigen::Index k = 0; k < lambda.size(); ++k) {
            phase(k) = std::exp(std::complex<double>(0.0, -amplitude * lambda(k)));
        }
        const Eigen::MatrixXcd disp = u * phase.asDiagonal() * u.adjoint();
        averaged += weights[i] * (disp * rho * disp.adjoint());
    }
    return averaged;
}

}  // namespace

int recommended_fock_cutoff(std::complex<double> alpha, const ChannelTriad& triad) {
    const double gain = triad.scalar_gain();
    const double noise = triad.y(0, 0);
    const double extra = std::max(0.0, noise - 0.5 * (1.0 - gain * gain));
    const double mag = std::abs(alpha);
    return static_cast<int>(
        std::ceil(mag * mag + 10.0 * mag + 20.0 + 8.0 * extra + 12.0 * std::sqrt(extra)));
}

double fock_fidelity_oracle(std::complex<double> alpha, const ChannelTriad& triad,
                            int cutoff) {
    if (cutoff < 2) {
        throw std::invalid_argument("fock_fidelity_oracle: cutoff must be >= 2");
    }
    if (!triad.x_is_scalar(1e-12)) {
        throw std::invalid_argument("fock_fidelity_oracle: x must be a scalar multiple of I");
    }
    const Eigen::Matrix2d y_iso = triad.y - triad.y(0, 0) * Eigen::Matrix2d::Identity();
    if (y_iso.cwiseAbs().maxCoeff() > 1e-12 || triad.d.cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument(
            "fock_fidelity_oracle: only isotropic, displacement-free triads supported");
    }
    const double gain = triad.scalar_gain();
    if (std::abs(gain) > 1.0 + 1e-12) {
        throw std::invalid_argument("fock_fidelity_oracle: |gain| must be <= 1");
    }
    const double tau = std::min(gain * gain, 1.0);
    double added_noise = triad.y(0, 0) - 0.5 * (1.0 - tau);
    if (added_noise < -1e-10) {
        throw std::invalid_argument("fock_fidelity_oracle: triad is not completely positive");
    }
    added_noise = std::max(added_noise, 0.0);

    const Eigen::VectorXcd input = coherent_vector(alpha, cutoff);
    if (1.0 - input.squaredNorm() > 1e-8) {
        throw std::invalid_argument("fock_fidelity_oracle: cutoff too small for input tail");
    }
    const Eigen::MatrixXcd rho_in = input * input.adjoint();

    Eigen::MatrixXcd rho = apply_pure_loss(rho_in, tau);
    if (gain < 0.0) {
        // the sign of the gain is a parity conjugation on top of the loss
        Eigen::VectorXcd parity(cutoff);
        for (int n = 0; n < cutoff; ++n) {
            parity(n) = (n % 2 == 0) ? 1.0 : -1.0;
        }
        rho = parity.asDiagonal() * rho * parity.asDiagonal();
    }

    if (added_noise > 1e-15) {
        std::vector<double> nodes;
        std::vector<double> weights;
        gauss_hermite(32, nodes, weights);
        const double sigma = std::sqrt(2.0 * added_noise);

        Eigen::MatrixXcd ladder = Eigen::MatrixXcd::Zero(cutoff, cutoff);
        for (int n = 1; n < cutoff; ++n) {
            ladder(n - 1, n) = std::sqrt(static_cast<double>(n));
        }
        const Eigen::MatrixXcd h_q =
            std::complex<double>(0.0, 1.0) * (ladder.adjoint() - ladder);
        const Eigen::MatrixXcd h_p = -(ladder.adjoint() + ladder);

        rho = displace_average(rho, h_q, sigma, nodes, weights);
        rho = displace_average(rho, h_p, sigma, nodes, weights);
    }

    return (rho_in * rho).trace().real();
}

}  // namespace gmc
