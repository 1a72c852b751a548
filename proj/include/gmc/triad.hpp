#pragma once

#include <Eigen/Dense>

namespace gmc {

// Affine action of a single-mode Gaussian channel:
//   mean -> x * mean + d,   cov -> x * cov * x^T + y.
struct ChannelTriad {
    Eigen::Vector2d d = Eigen::Vector2d::Zero();
    Eigen::Matrix2d x = Eigen::Matrix2d::Identity();
    Eigen::Matrix2d y = Eigen::Matrix2d::Zero();

    static ChannelTriad identity();
    // x = gain * I, y = noise * I, d = 0
    static ChannelTriad isotropic(double gain, double noise);

    bool x_is_scalar(double tol = 1e-12) const;
    double scalar_gain() const { return x(0, 0); }

    // Most negative eigenvalue of the complete-positivity witness
    // y + (i/2) J - (i/2) x J x^T; physical channels give >= 0.
    double cp_defect() const;

    // Throws if y is asymmetric, indefinite, or the CP witness fails.
    void validate(double tol = 1e-10) const;
};

}  // namespace gmc
