#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sylvan/algebra_norms.hpp"
#include "sylvan/cauchy_domain.hpp"
#include "sylvan/cmatrix.hpp"
#include "sylvan/quadrature.hpp"
#include "sylvan/spectra.hpp"

namespace sylvan {

/// Bivariate norm-control function h(s, t) >= 0. `monotone_declared` lets the
/// caller promise h is nondecreasing in each argument, which turns the
/// monotonized value into the single evaluation h(s, t).
struct NormControlFn {
  std::function<double(double, double)> h;
  bool monotone_declared = false;

  /// h(s, t) = s: the control function of the plain operator-norm algebra.
  static NormControlFn identity();
};

/// sup of h over [0, s] x [0, t], approximated by a grid x grid lattice that
/// includes the endpoints. Declared-monotone h short-circuits to h(s, t).
/// Throws Error(NonFiniteH) when h produces NaN/Inf on the lattice.
double monotonize(const NormControlFn& h, double s, double t, int grid = 64);

/// Every ingredient of the explicit solution bound
///   g = (24/pi) ||Q||_A (||A||_op + delta)^2 delta^-1 htilde(s, t)^2
/// with s = 3/delta and t = max(||A||_A, ||B||_A) + (||A||_op + delta) ||I||_A.
struct NormCertificate {
  AlgebraSpec spec;
  double norm_q_a = 0.0;
  double norm_a_a = 0.0;
  double norm_b_a = 0.0;
  double op_norm_a = 0.0;
  double delta = 0.0;
  double norm_i_a = 0.0;
  double h_arg_s = 0.0;
  double h_arg_t = 0.0;
  double h_tilde = 0.0;
  double g_value = 0.0;
  double norm_x_a = 0.0;
  bool pass = false;  // norm_x_a <= g_value
};

/// Evaluates the bound for a computed solution X of BX - XA = Q. Requires
/// square, commonly indexed inputs and normal A, B (Error(NotNormal)
/// otherwise; callers that allow non-normal solves skip certification).
NormCertificate certify(const CMatrix& a, const CMatrix& b, const CMatrix& q, const CMatrix& x,
                        const AlgebraSpec& spec, const NormControlFn& h, const Separation& sep);

struct SolveOptions {
  double tol = 1e-9;
  int q0 = 2;       // initial Gauss-Legendre order per edge
  int q_max = 64;   // order cap for the doubling loop
  bool certify = true;
  AlgebraSpec spec = AlgebraSpec::operator_l2();
  NormControlFn h = NormControlFn::identity();
  int threads = 0;  // 0 = SYLVAN_THREADS env var, else 1
};

struct SolveReport {
  CMatrix x = CMatrix::zero(1, 1);
  double residual_fro = 0.0;
  int order_used = 0;
  bool converged = false;
  std::size_t node_count = 0;

  SpectrumSet spectrum_a, spectrum_b;
  Separation sep;
  GridDomain domain;
  DomainChecks checks;
  double max_winding_dev_a = 0.0;  // max |selfcheck - 1| over eigenvalues of A
  double max_winding_dev_b = 0.0;  // max |selfcheck| over eigenvalues of B

  bool certified = false;  // certificate field is meaningful
  NormCertificate certificate;
  std::vector<std::string> warnings;
};

/// One quadrature pass at fixed nodes:
///   (1/(2 pi i)) sum_j w_j (B - z_j I)^{-1} Q (z_j I - A)^{-1}.
/// Deterministic: terms are reduced in node-index order regardless of the
/// thread count. Throws Error(ResolventSingular) if a factorization at some
/// node is numerically singular.
CMatrix contour_apply(const CMatrix& a, const CMatrix& b, const CMatrix& q,
                      const ContourQuadrature& quad, int threads = 0);

/// Full pipeline: spectra -> separation -> grid domain -> verified boundary ->
/// adaptive contour quadrature, doubling the order from q0 until both the
/// Cauchy difference and the residual pass, up to q_max. A solve that hits
/// q_max unconverged still returns its best X with converged = false.
SolveReport solve_sylvester(const CMatrix& a, const CMatrix& b, const CMatrix& q,
                            const SolveOptions& opts = {});

/// A^T X + X A + Q = 0 via the reduction B := -A^T (plain transpose), which
/// is the Sylvester problem B X - X A = Q.
SolveReport solve_lyapunov(const CMatrix& a, const CMatrix& q, const SolveOptions& opts = {});

}  // namespace sylvan
