#include "gmc/mode_map.hpp"

#include <stdexcept>

namespace gmc {

ModeLinearMap::ModeLinearMap(Eigen::MatrixXd coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.rows() < 1 || coeffs_.cols() < 1) {
        throw std::invalid_argument("ModeLinearMap: empty coefficient matrix");
    }
    if (!coeffs_.allFinite()) {
        throw std::invalid_argument("ModeLinearMap: coefficients must be finite");
    }
}

double ModeLinearMap::row_orthonormality_defect() const {
    const Eigen::MatrixXd gram = coeffs_ * coeffs_.transpose();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(coeffs_.rows(), coeffs_.rows());
    return (gram - id).cwiseAbs().maxCoeff();
}

bool ModeLinearMap::has_orthonormal_rows(double tol) const {
    return row_orthonormality_defect() <= tol;
}

ModeLinearMap ModeLinearMap::compose(const ModeLinearMap& inner) const {
    if (input_modes() != inner.output_modes()) {
        throw std::invalid_argument("ModeLinearMap::compose: dimension mismatch");
    }
    return ModeLinearMap(coeffs_ * inner.coeffs_);
}

QuadratureLayout::QuadratureLayout(int mode_count) : modes(mode_count) {
    if (mode_count < 1) {
        throw std::invalid_argument("QuadratureLayout: mode count must be >= 1");
    }
}

Eigen::MatrixXd lift_to_quadratures(const ModeLinearMap& map) {
    const Eigen::MatrixXd& m = map.coefficients();
    Eigen::MatrixXd lifted = Eigen::MatrixXd::Zero(2 * m.rows(), 2 * m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            lifted(2 * i, 2 * j) = m(i, j);
            lifted(2 * i + 1, 2 * j + 1) = m(i, j);
        }
    }
    return lifted;
}

Eigen::MatrixXd symplectic_form(int modes) {
    QuadratureLayout layout(modes);
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(layout.dim(), layout.dim());
    for (int k = 0; k < modes; ++k) {
        j(layout.q_index(k), layout.p_index(k)) = 1.0;
        j(layout.p_index(k), layout.q_index(k)) = -1.0;
    }
    return j;
}

Eigen::MatrixXd block_ordering_permutation(int modes) {
    QuadratureLayout layout(modes);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(layout.dim(), layout.dim());
    for (int k = 0; k < modes; ++k) {
        p(k, layout.q_index(k)) = 1.0;
        p(modes + k, layout.p_index(k)) = 1.0;
    }
    return p;
}

}  // namespace gmc
