#include "sylvan/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "sylvan/error.hpp"

namespace sylvan {

double sylvester_residual(const CMatrix& a, const CMatrix& b, const CMatrix& q, const CMatrix& x) {
  require_sylvester_shapes(a, b, q);
  const Eigen::MatrixXcd defect = b.mat() * x.mat() - x.mat() * a.mat() - q.mat();
  return defect.norm();
}

CMatrix kron_solve(const CMatrix& a, const CMatrix& b, const CMatrix& q) {
  require_sylvester_shapes(a, b, q);
  const Index n = a.nrows(), m = b.nrows();
  if (m * n > 4096) raise(ErrorCode::SizeGuard, "vectorized system larger than 4096 unknowns");

  const auto nn = static_cast<Eigen::Index>(n), mm = static_cast<Eigen::Index>(m);
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(mm * nn, mm * nn);
  // Column-major vec: vec(BX) = (I (x) B) vec X, vec(XA) = (A^T (x) I) vec X.
  for (Eigen::Index j = 0; j < nn; ++j) big.block(j * mm, j * mm, mm, mm) = b.mat();
  for (Eigen::Index j = 0; j < nn; ++j)
    for (Eigen::Index i = 0; i < nn; ++i)
      big.block(j * mm, i * mm, mm, mm).diagonal().array() -= a.mat()(i, j);

  Eigen::VectorXcd rhs(mm * nn);
  for (Eigen::Index j = 0; j < nn; ++j) rhs.segment(j * mm, mm) = q.mat().col(j);

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(big);
  const double rc = lu.rcond();
  if (!std::isfinite(rc) || rc < 1e-14)
    raise(ErrorCode::SingularSystem, "Kronecker system numerically singular; spectra too close");
  const Eigen::VectorXcd sol = lu.solve(rhs);
  if (!sol.allFinite()) raise(ErrorCode::SingularSystem, "Kronecker solve produced non-finite values");

  Eigen::MatrixXcd x(mm, nn);
  for (Eigen::Index j = 0; j < nn; ++j) x.col(j) = sol.segment(j * mm, mm);
  return CMatrix(std::move(x), q.row_offset(), q.col_offset());
}

CMatrix eig_solve_normal(const CMatrix& a, const CMatrix& b, const CMatrix& q) {
  require_sylvester_shapes(a, b, q);
  if (!is_normal(a)) raise(ErrorCode::NotNormal, "A is not normal");
  if (!is_normal(b)) raise(ErrorCode::NotNormal, "B is not normal");

  // For a normal matrix the Schur form is diagonal (up to roundoff), so the
  // Schur vectors are already the unitary eigenbasis.
  Eigen::ComplexSchur<Eigen::MatrixXcd> sa(a.mat(), true);
  Eigen::ComplexSchur<Eigen::MatrixXcd> sb(b.mat(), true);
  if (sa.info() != Eigen::Success || sb.info() != Eigen::Success)
    raise(ErrorCode::EigFailure, "Schur decomposition did not converge");
  const Eigen::VectorXcd alpha = sa.matrixT().diagonal();
  const Eigen::VectorXcd beta = sb.matrixT().diagonal();
  const Eigen::MatrixXcd ua = sa.matrixU();
  const Eigen::MatrixXcd ub = sb.matrixU();

  double scale = 0.0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) scale = std::max(scale, std::abs(alpha(i)));
  for (Eigen::Index i = 0; i < beta.size(); ++i) scale = std::max(scale, std::abs(beta(i)));
  const double overlap_tol = 1e-12 * (1.0 + scale);

  Eigen::MatrixXcd y = ub.adjoint() * q.mat() * ua;
  for (Eigen::Index i = 0; i < y.rows(); ++i)
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
      const Complex gap = beta(i) - alpha(j);
      if (std::abs(gap) <= overlap_tol)
        raise(ErrorCode::SpectraOverlap, "eigenvalue of B coincides with eigenvalue of A");
      y(i, j) /= gap;
    }
  Eigen::MatrixXcd x = ub * y * ua.adjoint();
  return CMatrix(std::move(x), q.row_offset(), q.col_offset());
}

}  // namespace sylvan
