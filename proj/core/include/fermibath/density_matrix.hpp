// density_matrix.hpp — Validated density matrices in the number basis |0>..|dim-1>

#pragma once

#include <Eigen/Dense>

namespace fermibath {

// Invariant defects of a candidate density matrix.
double hermiticity_defect(const Eigen::MatrixXcd& m); // max |m_ij - conj(m_ji)|
double trace_defect(const Eigen::MatrixXcd& m);       // |Tr m - 1|
double min_eigenvalue(const Eigen::MatrixXcd& m);     // of the hermitized part

class DensityMatrix {
public:
    struct Tolerances {
        double hermiticity = 1e-12;
        double trace = 1e-10;
        double positivity = 1e-9; // min eigenvalue >= -positivity
    };

    // |level><level|
    static DensityMatrix number_state(int dim, int level);

    // Diagonal state from populations; rescaled to unit trace.
    static DensityMatrix from_populations(const Eigen::VectorXd& populations);

    // Validates the invariants before accepting the matrix.
    static DensityMatrix from_matrix(Eigen::MatrixXcd m);
    static DensityMatrix from_matrix(Eigen::MatrixXcd m, const Tolerances& tol);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return mat_; }

    double hermiticity_defect() const { return fermibath::hermiticity_defect(mat_); }
    double trace_defect() const { return fermibath::trace_defect(mat_); }
    double min_eigenvalue() const { return fermibath::min_eigenvalue(mat_); }

private:
    explicit DensityMatrix(Eigen::MatrixXcd m) : mat_(std::move(m)) {}
    Eigen::MatrixXcd mat_;
};

} // namespace fermibath
