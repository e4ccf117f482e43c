#ifndef TROTTERKIT_EIG_HPP
#define TROTTERKIT_EIG_HPP

#include <vector>

#include "trotterkit/matrix.hpp"

namespace trotterkit {

// A = U diag(eigenvalues) U^dag with U unitary and eigenvalues sorted ascending.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;  // columns are the orthonormal eigenbasis
};

// Hermitian eigendecomposition by cyclic Jacobi rotations.
// Iteration cap 100 sweeps, off-diagonal threshold 1e-12 * ||A||_F.
// Throws std::invalid_argument for non-Hermitian input and std::runtime_error
// (carrying the residual) if the sweep cap is hit.
SpectralDecomposition eig_hermitian(const ComplexMatrix& a);

}  // namespace trotterkit

#endif
