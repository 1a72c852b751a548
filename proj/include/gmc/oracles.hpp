#pragma once

#include <complex>

#include "gmc/gaussian.hpp"
#include "gmc/reduction.hpp"

namespace gmc {

// Joint Gaussian state over every mode entering the scheme, in the fixed
// registry order (signal, aux x (N-1), env x N, memory[, idler]). The idler
// is present when half of an entangled pair is transmitted.
struct MultimodeGaussianScene {
    int uses = 2;
    bool has_idler = false;
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;

    int modes() const { return 2 * uses + 1 + (has_idler ? 1 : 0); }

    int signal_mode() const { return 0; }
    int aux_mode(int i) const { return 1 + i; }           // i in [0, N-2]
    int env_mode(int i) const { return uses + i; }        // i in [0, N-1]
    int memory_mode() const { return 2 * uses; }
    int idler_mode() const { return 2 * uses + 1; }
};

// Signal state on mode 0; aux and memory in vacuum, environments thermal at
// params.thermal, no cross-correlations.
MultimodeGaussianScene make_scene(const ChannelParams& params, const GaussianState& signal);

// Mode 0 of `pair` becomes the transmitted signal, mode 1 the kept idler;
// their cross-covariance is preserved in the joint state.
MultimodeGaussianScene make_entangled_scene(const ChannelParams& params,
                                            const GaussianState& pair);

// Brute-force reference path: lifts the complete dilation to quadratures,
// applies it to the joint moments, and restricts to the decoded signal mode
// (plus the idler when present). Validates effective_triad, apply_triad and
// apply_triad_to_half.
GaussianState propagate_full_scene(const ChannelParams& params,
                                   const MultimodeGaussianScene& scene);

// Independent density-matrix route for the coherent-state fidelity. The
// isotropic triad (gain * I, noise * I) with |gain| <= 1 is decomposed into a
// pure-loss channel (Kraus sum in a truncated number basis) followed by
// classical Gaussian displacement noise (Gauss-Hermite quadrature over the
// displacement distribution); returns Tr[rho_in rho_out].
// Throws if the truncated input tail mass exceeds 1e-8.
double fock_fidelity_oracle(std::complex<double> alpha, const ChannelTriad& triad,
                            int cutoff);

// Cutoff heuristic: |alpha|^2 + 10 |alpha| + 20, widened by the added-noise
// spread so the displaced states stay inside the truncated space.
int recommended_fock_cutoff(std::complex<double> alpha, const ChannelTriad& triad);

}  // namespace gmc
