#pragma once

#include <Eigen/Dense>

namespace gmc {

// Real linear map on bosonic mode operators: rows index output modes,
// columns input modes. Passive networks and channel dilations are
// represented this way; a complete dilation has orthonormal rows.
class ModeLinearMap {
public:
    explicit ModeLinearMap(Eigen::MatrixXd coefficients);

    Eigen::Index output_modes() const { return coeffs_.rows(); }
    Eigen::Index input_modes() const { return coeffs_.cols(); }
    const Eigen::MatrixXd& coefficients() const { return coeffs_; }
    double coefficient(Eigen::Index out, Eigen::Index in) const { return coeffs_(out, in); }

    // max |M M^T - I| over entries; zero for a complete dilation
    double row_orthonormality_defect() const;
    bool has_orthonormal_rows(double tol = 1e-12) const;

    ModeLinearMap compose(const ModeLinearMap& inner) const;

private:
    Eigen::MatrixXd coeffs_;
};

// Fixed mode-interleaved quadrature ordering (q1, p1, q2, p2, ...).
struct QuadratureLayout {
    int modes = 0;

    explicit QuadratureLayout(int mode_count);
    int dim() const { return 2 * modes; }
    int q_index(int mode) const { return 2 * mode; }
    int p_index(int mode) const { return 2 * mode + 1; }
};

// Expands each mode coefficient c into the 2x2 block c*I acting on (q, p).
Eigen::MatrixXd lift_to_quadratures(const ModeLinearMap& map);

// J = omega ^ n in the interleaved layout, omega = [[0,1],[-1,0]].
Eigen::MatrixXd symplectic_form(int modes);

// Permutation P with R_block = P * R_interleaved, where R_block lists all q
// components first and then all p components. Provided so tests can compare
// against the block-ordered convention.
Eigen::MatrixXd block_ordering_permutation(int modes);

}  // namespace gmc
