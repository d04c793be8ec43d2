#pragma once

#include "sylvan/cmatrix.hpp"

namespace sylvan {

/// || B X - X A - Q ||_F, the defect of a candidate solution.
double sylvester_residual(const CMatrix& a, const CMatrix& b, const CMatrix& q, const CMatrix& x);

/// Reference solve by vectorization: (I (x) B - A^T (x) I) vec X = vec Q with
/// column-major vec. Dense and cubic in m*n, so it refuses problems with
/// m*n > 4096. Throws Error(SingularSystem) when the Kronecker matrix is
/// numerically singular (overlapping spectra).
CMatrix kron_solve(const CMatrix& a, const CMatrix& b, const CMatrix& q);

/// Reference solve for normal A and B by unitary diagonalization:
/// X = U_B Y U_A^* with Y_ij = (U_B^* Q U_A)_ij / (beta_i - alpha_j).
/// Throws Error(NotNormal) for non-normal input and Error(SpectraOverlap)
/// when some beta_i - alpha_j vanishes.
CMatrix eig_solve_normal(const CMatrix& a, const CMatrix& b, const CMatrix& q);

}  // namespace sylvan
