#include "gmc/reduction.hpp"

#include <cmath>
#include <stdexcept>

namespace gmc {

ChannelParams::ChannelParams(int uses_, double eta_, double eps_, double thermal_, bool flips_)
    : uses(uses_), eta(eta_), eps(eps_), thermal(thermal_), flips(flips_) {
    SplitterSpec splitter_check(uses, flips);
    MemoryChannelSpec channel_check(uses, eta, eps);
    if (thermal < 0.0) {
        throw std::invalid_argument("ChannelParams: thermal occupation must be >= 0");
    }
}

double CoefficientSet::norm_sq() const {
    return zeta_in * zeta_in + zeta_b.squaredNorm() + zeta_e.squaredNorm() + zeta_m * zeta_m;
}

ModeLinearMap compose_full_dilation(const ChannelParams& params) {
    const int n = params.uses;
    const ModeLinearMap encoder = build_encoder(params.splitter());
    const ModeLinearMap channel = build_channel_coefficients(params.channel());
    const ModeLinearMap decoder = build_decoder(params.splitter());

    Eigen::MatrixXd embedded = Eigen::MatrixXd::Identity(2 * n + 1, 2 * n + 1);
    embedded.topLeftCorner(n, n) = encoder.coefficients();

    return ModeLinearMap(decoder.coefficients() * channel.coefficients() * embedded);
}

CoefficientSet reduce(const ChannelParams& params) {
    const int n = params.uses;
    const Eigen::RowVectorXd row = compose_full_dilation(params).coefficients().row(0);
    CoefficientSet coeffs;
    coeffs.zeta_in = row(0);
    coeffs.zeta_b = -row.segment(1, n - 1).transpose();
    coeffs.zeta_e = row.segment(n, n).transpose();
    coeffs.zeta_m = row(2 * n);
    return coeffs;
}

namespace {

// Alternating sign (-1)^exponent when flips are on; without flips every
// alternation collapses to its value at index 1, i.e. to the sign carried by
// the structural "+1" terms in the exponents.
struct SignRule {
    bool flips;
    double pair(int a, int b) const {  // (-1)^(a+b)
        return flips ? ((a + b) % 2 == 0 ? 1.0 : -1.0) : 1.0;
    }
    double env(int i, int k) const {  // (-1)^(i+k+1)
        return flips ? ((i + k + 1) % 2 == 0 ? 1.0 : -1.0) : -1.0;
    }
    double env_prefactor(int i) const {  // (-1)^(i+1) in the output row
        return flips ? (i % 2 == 1 ? 1.0 : -1.0) : 1.0;
    }
    double mem(int k) const {  // (-1)^k
        return flips ? (k % 2 == 0 ? 1.0 : -1.0) : -1.0;
    }
};

}  // namespace

CoefficientSet closed_form_coefficients(const ChannelParams& params) {
    const int n = params.uses;
    const ModeLinearMap channel = build_channel_coefficients(params.channel());
    const SplitterSpec splitter = params.splitter();
    const SignRule sign{params.flips};
    const double root_n = std::sqrt(static_cast<double>(n));

    auto f = [&](int k, int j) { return channel.coefficient(k - 1, j - 1); };
    auto g = [&](int k, int j) { return channel.coefficient(k - 1, n + j - 1); };
    auto h = [&](int k) { return channel.coefficient(k - 1, 2 * n); };

    CoefficientSet coeffs;

    double zin = 0.0;
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= k; ++j) {
            zin += sign.pair(j, k) * f(k, j);
        }
    }
    coeffs.zeta_in = zin / n;

    coeffs.zeta_b = Eigen::VectorXd::Zero(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        double direct = 0.0;
        for (int j = i; j <= n; ++j) {
            direct += sign.pair(j, i) * f(j, i);
        }
        double residual = 0.0;
        for (int j = i + 1; j <= n; ++j) {
            for (int k = i + 1; k <= j; ++k) {
                residual += sign.pair(j, k) * f(j, k);
            }
        }
        coeffs.zeta_b(i - 1) = (splitter.transmissivity(i) * direct -
                                splitter.reflectivity(i) * splitter.reflectivity(i + 1) *
                                    residual) /
                               root_n;
    }

    coeffs.zeta_e = Eigen::VectorXd::Zero(n);
    for (int i = 1; i <= n; ++i) {
        double acc = 0.0;
        for (int k = i; k <= n; ++k) {
            acc += sign.env(i, k) * g(k, i);
        }
        coeffs.zeta_e(i - 1) = sign.env_prefactor(i) * acc / root_n;
    }

    double zm = 0.0;
    for (int k = 1; k <= n; ++k) {
        zm += sign.mem(k) * h(k);
    }
    coeffs.zeta_m = zm / root_n;

    return coeffs;
}

ChannelTriad effective_triad(const ChannelParams& params) {
    const CoefficientSet coeffs = reduce(params);
    const double noise = 0.5 * coeffs.zeta_b.squaredNorm() +
                         (params.thermal + 0.5) * coeffs.zeta_e.squaredNorm() +
                         0.5 * coeffs.zeta_m * coeffs.zeta_m;
    return ChannelTriad::isotropic(coeffs.zeta_in, noise);
}

}  // namespace gmc
