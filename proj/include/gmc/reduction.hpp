#pragma once

#include <Eigen/Dense>

#include "gmc/memory_channel.hpp"
#include "gmc/mode_map.hpp"
#include "gmc/splitter.hpp"
#include "gmc/triad.hpp"

namespace gmc {

// One complete scheme instance: encoder, N channel uses, decoder.
struct ChannelParams {
    int uses = 2;          // N, even and >= 2
    double eta = 1.0;      // [0, 1]
    double eps = 0.0;      // [0, 1]
    double thermal = 0.0;  // mean excitation per environment mode, >= 0
    bool flips = true;

    ChannelParams(int uses, double eta, double eps, double thermal, bool flips);

    SplitterSpec splitter() const { return {uses, flips}; }
    MemoryChannelSpec channel() const { return {uses, eta, eps}; }
};

// Decomposition of the decoded signal mode over the scheme inputs:
//   a_out = zeta_in a - sum_i zeta_b[i] b_i + sum_i zeta_e[i] e_i + zeta_m m.
// zeta_e entries are stored signed (flip signs absorbed).
struct CoefficientSet {
    double zeta_in = 0.0;
    Eigen::VectorXd zeta_b;  // N-1 entries
    Eigen::VectorXd zeta_e;  // N entries, signed
    double zeta_m = 0.0;

    // sums to 1 for any complete dilation
    double norm_sq() const;
};

// Decoder * channel * (encoder on the signal block, identity on environment
// and memory columns): N x (2N+1) with orthonormal rows. Row 0 is the
// decoded signal mode; the coefficient column order is
// (a, b_1..b_{N-1}, e_1..e_N, m).
ModeLinearMap compose_full_dilation(const ChannelParams& params);

// Reads the CoefficientSet off row 0 of compose_full_dilation. This is the
// authoritative path; closed_form_coefficients cross-checks it.
CoefficientSet reduce(const ChannelParams& params);

// Direct evaluation of the coefficient sums over the channel entries f, g, h
// and the splitter amplitudes r, t. With flips the sums alternate in sign;
// without flips every alternating factor is replaced by its value at index 1.
CoefficientSet closed_form_coefficients(const ChannelParams& params);

// Single-mode channel equivalent of the whole scheme: x = zeta_in * I,
// y = [sum zeta_b^2 / 2 + sum zeta_e^2 (thermal + 1/2) + zeta_m^2 / 2] * I,
// d = 0. Assumes independent inputs: auxiliary and memory modes in vacuum,
// environment modes i.i.d. thermal.
ChannelTriad effective_triad(const ChannelParams& params);

}  // namespace gmc
