#include "gmc/triad.hpp"

#include <complex>
#include <stdexcept>

namespace gmc {

ChannelTriad ChannelTriad::identity() {
    return ChannelTriad{};
}

ChannelTriad ChannelTriad::isotropic(double gain, double noise) {
    ChannelTriad t;
    t.x = gain * Eigen::Matrix2d::Identity();
    t.y = noise * Eigen::Matrix2d::Identity();
    return t;
}

bool ChannelTriad::x_is_scalar(double tol) const {
    const Eigen::Matrix2d diff = x - x(0, 0) * Eigen::Matrix2d::Identity();
    return diff.cwiseAbs().maxCoeff() <= tol;
}

double ChannelTriad::cp_defect() const {
    using cplx = std::complex<double>;
    Eigen::Matrix2d j;
    j << 0.0, 1.0, -1.0, 0.0;
    const Eigen::Matrix2d commutator = j - x * j * x.transpose();
    Eigen::Matrix2cd witness = y.cast<cplx>() + cplx(0.0, 0.5) * commutator.cast<cplx>();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(witness);
    return solver.eigenvalues().minCoeff();
}

void ChannelTriad::validate(double tol) const {
    if (!d.allFinite() || !x.allFinite() || !y.allFinite()) {
        throw std::invalid_argument("ChannelTriad: non-finite entries");
    }
    if ((y - y.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("ChannelTriad: y must be symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(y);
    if (solver.eigenvalues().minCoeff() < -tol) {
        throw std::invalid_argument("ChannelTriad: y must be positive semidefinite");
    }
    if (cp_defect() < -tol) {
        throw std::invalid_argument("ChannelTriad: complete-positivity witness failed");
    }
}

}  // namespace gmc
