#include "fermibath/density_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "fermibath/errors.hpp"

namespace fermibath {

double hermiticity_defect(const Eigen::MatrixXcd& m)
{
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double trace_defect(const Eigen::MatrixXcd& m)
{
    return std::abs(m.trace() - std::complex<double>(1.0, 0.0));
}

double min_eigenvalue(const Eigen::MatrixXcd& m)
{
    const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::number_state(int dim, int level)
{
    if (dim < 2 || level < 0 || level >= dim) {
        throw StructuralError("number_state: level out of range");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    m(level, level) = 1.0;
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_populations(const Eigen::VectorXd& populations)
{
    const auto dim = populations.size();
    if (dim < 2) {
        throw StructuralError("from_populations: need at least two levels");
    }
    if (populations.minCoeff() < 0.0) {
        throw std::invalid_argument("from_populations: negative population");
    }
    const double total = populations.sum();
    if (!(total > 0.0)) {
        throw std::invalid_argument("from_populations: populations sum to zero");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        m(i, i) = populations(i) / total;
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd m)
{
    return from_matrix(std::move(m), Tolerances{});
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd m, const Tolerances& tol)
{
    if (m.rows() != m.cols() || m.rows() < 2) {
        throw StructuralError("from_matrix: expected a square matrix of dimension >= 2");
    }
    if (fermibath::hermiticity_defect(m) > tol.hermiticity) {
        throw std::invalid_argument("from_matrix: hermiticity defect above tolerance");
    }
    if (fermibath::trace_defect(m) > tol.trace) {
        throw std::invalid_argument("from_matrix: trace defect above tolerance");
    }
    if (fermibath::min_eigenvalue(m) < -tol.positivity) {
        throw std::invalid_argument("from_matrix: negative eigenvalue below tolerance");
    }
    return DensityMatrix(std::move(m));
}

} // namespace fermibath
