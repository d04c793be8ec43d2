#pragma once

#include <vector>

#include "sylvan/cmatrix.hpp"

namespace sylvan {

/// Eigenvalues of a finite section, sorted by (Re, Im), with the normality verdict.
struct SpectrumSet {
  std::vector<Complex> values;
  double normality_residual = 0.0;
  bool is_normal = false;

  double max_abs() const;
};

/// Dense eigensolve; Hermitian inputs take the self-adjoint path and yield
/// real eigenvalues in ascending order.
SpectrumSet spectrum(const CMatrix& a);

/// The two spectral-separation quantities plus the grid parameters derived
/// from them: delta_prime = delta_cheb / 3 and n0 = floor((||A||_op + delta') / delta').
struct Separation {
  double delta_cheb = 0.0;
  double delta_eucl = 0.0;
  double delta_prime = 0.0;
  Index n0 = 0;
};

Separation separation(const SpectrumSet& sa, const SpectrumSet& sb, double op_norm_a);

}  // namespace sylvan
