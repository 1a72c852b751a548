#pragma once

#include <string>

#include "gmc/reduction.hpp"

namespace gmc {

enum class OutputFormat { csv, json };

struct SweepAxis {
    std::string name;
    double start = 0.0;
    double stop = 1.0;
    int steps = 51;  // >= 2

    double value_at(int i) const;
};

// Grid specification for the sweep commands. Both axes must name parameters
// from {eta, eps, T, mu, alpha2, N}; the CSV contracts fix them to eta
// (outer) and eps (inner).
struct SweepSpec {
    SweepAxis eta_axis{"eta", 0.0, 1.0, 51};
    SweepAxis eps_axis{"eps", 0.0, 1.0, 51};
    int uses = 2;
    bool flips = true;
    double thermal = 3.0;
    double alpha2 = 8.0;
    double mu = 0.6;
    OutputFormat format = OutputFormat::csv;

    void validate() const;  // throws std::invalid_argument
};

// Component magnitudes {signal, aux_i, env_i, memory} plus the bare
// single-use baseline eta.
std::string render_coefficients(const ChannelParams& params, OutputFormat format);

// Header `eta,eps,value`; one row per grid point, row-major over (eta, eps),
// every value printed with 12 significant digits. Grid points are evaluated
// concurrently; row order is deterministic.
std::string render_fidelity_sweep(const SweepSpec& spec);

// Header `eta,eps,d_minus,separable` with the boolean separability verdict.
std::string render_entanglement_sweep(const SweepSpec& spec);

}  // namespace gmc
