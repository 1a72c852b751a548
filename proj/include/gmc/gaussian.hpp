#pragma once

#include <Eigen/Dense>

#include "gmc/triad.hpp"

namespace gmc {

// First moments and covariance matrix over n modes in the interleaved
// quadrature layout, with hbar = 1 and vacuum covariance I/2.
struct GaussianState {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;

    GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

    int modes() const { return static_cast<int>(mean.size()) / 2; }

    // Moduli of the eigenvalues of J * cov, one per mode, ascending.
    Eigen::VectorXd symplectic_eigenvalues() const;
    // All symplectic eigenvalues >= 1/2 - tol.
    bool is_physical(double tol = 1e-10) const;
};

// mean = sqrt(2) (Re alpha, Im alpha), cov = I/2
GaussianState coherent_state(double alpha_re, double alpha_im);

// Two-mode squeezed vacuum with squeezing parameter mu = tanh(r) in [0, 1):
//   cov = 1/2 [[cosh(2r) I, sinh(2r) Z], [sinh(2r) Z, cosh(2r) I]],
// Z = diag(1, -1). The global 1/2 keeps mu = 0 equal to two vacua.
GaussianState tmsv_state(double mu);

// Product of n thermal modes, cov = (thermal + 1/2) I.
GaussianState thermal_state(double thermal, int modes);

// Single-mode state through a triad.
GaussianState apply_triad(const GaussianState& state, const ChannelTriad& triad);

// Mode A of a two-mode state through a triad with scalar x = zeta * I:
//   A' = zeta^2 A + y,  B' = B,  C' = zeta C,
// and the mode-A mean is transformed while mode B is untouched.
// Non-scalar x is rejected; use the full scene propagation for that case.
GaussianState apply_triad_to_half(const GaussianState& state, const ChannelTriad& triad);

}  // namespace gmc
