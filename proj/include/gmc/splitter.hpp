#pragma once

#include "gmc/mode_map.hpp"

namespace gmc {

// N-port splitter built from a cascade of two-port stages with
// r_i = sqrt(1/(N-i+1)), t_i = sqrt((N-i)/(N-i+1)). Phase flips, when
// enabled, act on the even-indexed channels (i = 2, 4, ...).
struct SplitterSpec {
    int ports = 2;       // N, even and >= 2
    bool flips = false;

    SplitterSpec(int ports, bool flips);

    double reflectivity(int stage) const;     // r_i, stage is 1-based
    double transmissivity(int stage) const;   // t_i
};

// Map from (a_in, b_1, ..., b_{N-1}) to the channel inputs (d_1, ..., d_N).
// Every output carries the signal with amplitude -1/sqrt(N) (times the flip
// sign); the final stage is fully reflective, so no N-th vacuum port exists.
ModeLinearMap build_encoder(const SplitterSpec& spec);

// Map from the channel outputs (d_1, ..., d_N) to (a_out, f_1, ..., f_{N-1}),
// the mirror cascade with stage i driven by splitter N-i+1. Flip signs are
// applied to the inputs before the cascade.
ModeLinearMap build_decoder(const SplitterSpec& spec);

}  // namespace gmc
