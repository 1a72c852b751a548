#pragma once

#include "gmc/mode_map.hpp"
#include "gmc/triad.hpp"

namespace gmc {

// Lossy bosonic memory channel over N consecutive uses. eta is the per-use
// transmissivity, eps the memory factor (0 = memoryless, 1 = perfect memory).
struct MemoryChannelSpec {
    int uses = 1;        // N >= 1
    double eta = 1.0;    // [0, 1]
    double eps = 0.0;    // [0, 1]

    MemoryChannelSpec(int uses, double eta, double eps);
};

// Complete dilation of the channel: N output rows over the 2N+1 input
// columns ordered (d_1..d_N, e_1..e_N, m). Row k reads
//   d_out_k = sqrt(eta) d_k
//             - sqrt(eps)(1-eta) sum_{j<k} (eps*eta)^{(k-j-1)/2} d_j
//             - sqrt((1-eps)(1-eta)) sum_{j<=k} (eps*eta)^{(k-j)/2} e_j
//             + sqrt(eps(1-eta)) (eps*eta)^{(k-1)/2} m.
// Boundary values eta, eps in {0, 1} are exact ((eps*eta)^0 == 1).
ModeLinearMap build_channel_coefficients(const MemoryChannelSpec& spec);

// eta -> 0 limit: d_out_k = -sqrt(eps) d_{k-1} - sqrt(1-eps) e_k
//                           + sqrt(eps) delta_{k,1} m.
// Coincides entrywise with build_channel_coefficients at eta = 0.
ModeLinearMap dephasing_limit_coefficients(double eps, int uses);

// Effective triad of one bare channel use against a thermal environment with
// mean occupation `thermal` (memory mode in vacuum).
ChannelTriad single_use_triad(double eta, double eps, double thermal);

}  // namespace gmc
