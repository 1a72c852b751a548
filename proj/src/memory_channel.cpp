#include "gmc/memory_channel.hpp"

#include <cmath>
#include <stdexcept>

namespace gmc {

namespace {

// x^k with 0^0 == 1, so the boundary channels stay exact
double ipow(double x, int k) {
    double acc = 1.0;
    for (int i = 0; i < k; ++i) {
        acc *= x;
    }
    return acc;
}

}  // namespace

MemoryChannelSpec::MemoryChannelSpec(int uses_, double eta_, double eps_)
    : uses(uses_), eta(eta_), eps(eps_) {
    if (uses < 1) {
        throw std::invalid_argument("MemoryChannelSpec: uses must be >= 1");
    }
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("MemoryChannelSpec: eta must lie in [0, 1]");
    }
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("MemoryChannelSpec: eps must lie in [0, 1]");
    }
}

ModeLinearMap build_channel_coefficients(const MemoryChannelSpec& spec) {
    const int n = spec.uses;
    const double eta = spec.eta;
    const double eps = spec.eps;
    const double root_ee = std::sqrt(eps * eta);
    const double cross = std::sqrt(eps) * (1.0 - eta);
    const double env = std::sqrt((1.0 - eps) * (1.0 - eta));
    const double mem = std::sqrt(eps * (1.0 - eta));

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, 2 * n + 1);
    for (int k = 1; k <= n; ++k) {
        m(k - 1, k - 1) = std::sqrt(eta);
        for (int j = 1; j < k; ++j) {
            m(k - 1, j - 1) = -cross * ipow(root_ee, k - j - 1);
        }
        for (int j = 1; j <= k; ++j) {
            m(k - 1, n + j - 1) = -env * ipow(root_ee, k - j);
        }
        m(k - 1, 2 * n) = mem * ipow(root_ee, k - 1);
    }
    return ModeLinearMap(std::move(m));
}

ModeLinearMap dephasing_limit_coefficients(double eps, int uses) {
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("dephasing_limit_coefficients: eps must lie in [0, 1]");
    }
    if (uses < 1) {
        throw std::invalid_argument("dephasing_limit_coefficients: uses must be >= 1");
    }
    const int n = uses;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, 2 * n + 1);
    for (int k = 1; k <= n; ++k) {
        if (k >= 2) {
            m(k - 1, k - 2) = -std::sqrt(eps);
        }
        m(k - 1, n + k - 1) = -std::sqrt(1.0 - eps);
        if (k == 1) {
            m(k - 1, 2 * n) = std::sqrt(eps);
        }
    }
    return ModeLinearMap(std::move(m));
}

ChannelTriad single_use_triad(double eta, double eps, double thermal) {
    MemoryChannelSpec spec(1, eta, eps);  // range validation
    if (thermal < 0.0) {
        throw std::invalid_argument("single_use_triad: thermal occupation must be >= 0");
    }
    const double noise =
        (1.0 - eps) * (1.0 - eta) * (thermal + 0.5) + eps * (1.0 - eta) * 0.5;
    return ChannelTriad::isotropic(std::sqrt(spec.eta), noise);
}

}  // namespace gmc
