#include "cheeger/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Dense>

namespace cheeger {

Spectrum eigenvalues_symmetric(const AdjacencyMatrix& matrix, double tol) {
    if (tol <= 0.0)
        throw std::invalid_argument("eigenvalues_symmetric: tol must be positive");
    if (!matrix.is_symmetric())
        throw std::invalid_argument("eigenvalues_symmetric: matrix is not symmetric");

    const int m = matrix.order;
    Eigen::MatrixXd M(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            M(i, j) = static_cast<double>(matrix.entries[i][j]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues_symmetric: solver did not converge");

    Spectrum s;
    s.eigenvalues.resize(m);
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        const double lambda = solver.eigenvalues()(i);
        const Eigen::VectorXd v = solver.eigenvectors().col(i);
        worst = std::max(worst, (M * v - lambda * v).norm());
        s.eigenvalues[i] = lambda;
    }
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
    s.residual_bound = worst;
    if (worst > tol)
        throw std::runtime_error(
            "eigenvalues_symmetric: residual exceeds tolerance");
    return s;
}

double second_largest(const Spectrum& spectrum) {
    if (spectrum.eigenvalues.size() < 2)
        throw std::invalid_argument("second_largest: spectrum order < 2");
    return spectrum.eigenvalues[1];
}

} // namespace cheeger
