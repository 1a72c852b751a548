#include "gmc/splitter.hpp"

#include <cmath>
#include <stdexcept>

namespace gmc {

SplitterSpec::SplitterSpec(int ports_, bool flips_) : ports(ports_), flips(flips_) {
    if (ports < 2 || ports % 2 != 0) {
        throw std::invalid_argument("SplitterSpec: port count must be even and >= 2");
    }
}

double SplitterSpec::reflectivity(int stage) const {
    return std::sqrt(1.0 / (ports - stage + 1));
}

double SplitterSpec::transmissivity(int stage) const {
    return std::sqrt(static_cast<double>(ports - stage) / (ports - stage + 1));
}

ModeLinearMap build_encoder(const SplitterSpec& spec) {
    const int n = spec.ports;
    // inputs (a, b_1, ..., b_{N-1}); a_line tracks the through beam
    Eigen::RowVectorXd a_line = Eigen::RowVectorXd::Zero(n);
    a_line(0) = 1.0;
    Eigen::MatrixXd m(n, n);
    for (int i = 1; i <= n; ++i) {
        const double r = spec.reflectivity(i);
        const double t = spec.transmissivity(i);
        Eigen::RowVectorXd b_line = Eigen::RowVectorXd::Zero(n);
        if (i <= n - 1) {
            b_line(i) = 1.0;
        }
        m.row(i - 1) = t * b_line - r * a_line;
        a_line = t * a_line + r * b_line;
    }
    if (spec.flips) {
        for (int i = 2; i <= n; i += 2) {
            m.row(i - 1) *= -1.0;
        }
    }
    return ModeLinearMap(std::move(m));
}

ModeLinearMap build_decoder(const SplitterSpec& spec) {
    const int n = spec.ports;
    // stage i pairs with splitter j = N-i+1, so r = sqrt(1/i), t = sqrt((i-1)/i);
    // the zeroth a-line is an idle vacuum port whose weight stays zero
    Eigen::RowVectorXd a_line = Eigen::RowVectorXd::Zero(n);
    Eigen::MatrixXd discard_rows(n - 1, n);
    for (int i = 1; i <= n; ++i) {
        const double r = std::sqrt(1.0 / i);
        const double t = std::sqrt((i - 1.0) / i);
        Eigen::RowVectorXd d_line = Eigen::RowVectorXd::Zero(n);
        d_line(i - 1) = 1.0;
        if (i >= 2) {
            discard_rows.row(i - 2) = t * d_line + r * a_line;
        }
        a_line = t * a_line - r * d_line;
    }
    Eigen::MatrixXd m(n, n);
    m.row(0) = a_line;
    m.bottomRows(n - 1) = discard_rows;
    if (spec.flips) {
        for (int k = 2; k <= n; k += 2) {
            m.col(k - 1) *= -1.0;
        }
    }
    return ModeLinearMap(std::move(m));
}

}  // namespace gmc
