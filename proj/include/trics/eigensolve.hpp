// eigensolve.hpp — symmetric tridiagonal implicit-QL solver (with eigenvectors)
// and a cyclic-Jacobi eigenvalue routine for small dense Hermitian matrices.
#pragma once

#include <vector>

#include "trics/types.hpp"

namespace trics {

// Implicit-shift QL for a real symmetric tridiagonal matrix, derived from the
// Algol tql2 procedure (Bowdler, Martin, Reinsch, Wilkinson) as in EISPACK.
// d: diagonal (size n), e: off-diagonal (size n-1, e[i] couples i and i+1).
// On return d holds the eigenvalues ascending and z[i][j] component i of the
// orthonormal eigenvector for d[j]. Throws on non-convergence.
void tridiagonal_eigs(std::vector<double>& d, std::vector<double>& e,
                      std::vector<std::vector<double>>& z);

// Eigenvalues (ascending) of a dense Hermitian matrix, row-major n x n.
std::vector<double> hermitian_eigenvalues(std::vector<cx> a, int n);

}  // namespace trics
