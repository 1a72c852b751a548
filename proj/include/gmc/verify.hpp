#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gmc/mode_map.hpp"
#include "gmc/reduction.hpp"

namespace gmc::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Hooks exist so tests can inject broken implementations and confirm the
// right check trips; default-constructed (empty) functions select the real
// implementation.
using ReduceFn = std::function<CoefficientSet(const ChannelParams&)>;
using DilationFn = std::function<ModeLinearMap(const ChannelParams&)>;

// |sum zeta^2 - 1| < 1e-12 on the N x eta x eps x flips grid.
CheckResult check_normalization(const ReduceFn& reduce_fn = {});

// Channel dilation and end-to-end composition rows orthonormal within 1e-12.
CheckResult check_dilation_orthonormality(const DilationFn& dilation_fn = {});

// effective_triad vs full-scene propagation within 1e-12, 200 random draws.
CheckResult check_triad_oracle(unsigned seed = 0xA5C3D201u);

// gaussian_fidelity vs the Fock-basis oracle within 1e-6, 10 draws.
CheckResult check_fock_fidelity(unsigned seed = 0xBEE0F1D5u);

// Transmitted-half cross block C' = zeta_in C within 1e-12, 100 random draws.
CheckResult check_entangled_cross_block(unsigned seed = 0xC0FFEE11u);

// Closed-form least symplectic eigenvalue vs the i J V~ spectrum within
// 1e-10 on 10^3 random physical two-mode states.
CheckResult check_ppt_dual_route(unsigned seed = 0xD15EA5E7u);

// Exact limits: identity at eta = 1, memoryless collapse at eps = 0,
// dephasing map equals the eta = 0 channel, decoder inverts the encoder.
CheckResult check_limit_cases();

// Grid-interior comparisons: zeta_in^2 gains from the flips and beats the
// bare single use; zeta_m^2 drops.
CheckResult check_flip_advantage(const ReduceFn& reduce_fn = {});

std::vector<CheckResult> run_all();

}  // namespace gmc::verify
