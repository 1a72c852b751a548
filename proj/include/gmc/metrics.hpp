#pragma once

#include <complex>
#include <optional>

#include "gmc/gaussian.hpp"
#include "gmc/reduction.hpp"

namespace gmc {

struct FidelityResult {
    double value = 0.0;  // in [0, 1]
    std::optional<ChannelParams> params;
    std::optional<std::complex<double>> alpha;
};

struct EntanglementResult {
    double d_minus = 0.0;         // least symplectic eigenvalue of the
                                  // partially transposed covariance
    bool separable = true;        // d_minus >= 1/2; the boundary is separable
};

// Overlap Tr[rho_in rho_out] of a pure single-mode Gaussian input with its
// channel output:
//   F = det(V_in + V_out)^{-1/2} exp(-1/2 delta^T (V_in + V_out)^{-1} delta),
//   delta = (x - I) mean_in + d.
// The input must be pure (least symplectic eigenvalue 1/2 within 1e-9).
FidelityResult gaussian_fidelity(const GaussianState& input, const ChannelTriad& triad);

// Convenience wrapper: coherent-state input through the scheme's effective
// triad, with the context recorded in the result.
FidelityResult transmission_fidelity(const ChannelParams& params, std::complex<double> alpha);

// PPT separability test for a two-mode state. Partial transposition reflects
// the second mode's momentum; d_minus is computed both from the spectrum of
// i J V~ and from the closed form
//   d^2 = (Dt - sqrt(Dt^2 - 4 det V)) / 2,  Dt = det A + det B - 2 det C,
// and the two routes must agree within 1e-10.
EntanglementResult ppt_least_eigenvalue(const GaussianState& two_mode_state);

// TMSV half-transmission: tmsv(mu) -> apply_triad_to_half -> PPT verdict.
EntanglementResult entanglement_survival(const ChannelParams& params, double mu);

}  // namespace gmc
