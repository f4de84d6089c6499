#ifndef CHEEGER_SPECTRAL_HPP
#define CHEEGER_SPECTRAL_HPP

#include <vector>

#include "cheeger/embedded_graph.hpp"

namespace cheeger {

struct Spectrum {
    std::vector<double> eigenvalues; // descending, with multiplicity
    double residual_bound = 0.0;     // max over i of ||M v_i - lambda_i v_i||
};

// Full spectrum of a small dense symmetric 0/1 matrix. Every eigenvalue is
// certified by the residual of its computed eigenvector; throws
// std::runtime_error if any residual exceeds tol, std::invalid_argument on
// a non-symmetric matrix or tol <= 0.
Spectrum eigenvalues_symmetric(const AdjacencyMatrix& matrix, double tol = 1e-9);

// Second entry of the descending multiplicity-counted list. Throws on
// order < 2.
double second_largest(const Spectrum& spectrum);

} // namespace cheeger

#endif
