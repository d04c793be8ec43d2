#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "sylvan/error.hpp"

namespace sylvan {

using Complex = std::complex<double>;
using Index = std::int64_t;

/// A finite section of a Z-indexed operator: a dense complex matrix whose
/// storage row r / column c correspond to the logical indices
/// row_offset + r and col_offset + c. Immutable after construction.
class CMatrix {
public:
  CMatrix(Eigen::MatrixXcd values, Index row_offset = 0, Index col_offset = 0);

  static CMatrix zero(Index nrows, Index ncols, Index row_offset = 0, Index col_offset = 0);
  static CMatrix identity(Index n, Index offset = 0);
  static CMatrix from_entries(Index nrows, Index ncols, const std::vector<Complex>& row_major,
                              Index row_offset = 0, Index col_offset = 0);

  Index nrows() const { return values_.rows(); }
  Index ncols() const { return values_.cols(); }
  Index row_offset() const { return row_offset_; }
  Index col_offset() const { return col_offset_; }

  const Eigen::MatrixXcd& mat() const { return values_; }
  Complex operator()(Index r, Index c) const { return values_(r, c); }

  bool square() const { return nrows() == ncols(); }
  /// Square with equal offsets: eligible for algebra norms and spectra-as-sections.
  bool is_section() const { return square() && row_offset_ == col_offset_; }

  double frobenius() const { return values_.norm(); }

private:
  Eigen::MatrixXcd values_;
  Index row_offset_;
  Index col_offset_;
};

/// ||A*A - AA*||_F. Zero exactly for normal matrices in exact arithmetic.
double normality_residual(const CMatrix& a);

/// Scale-invariant threshold below which a matrix is treated as normal.
double normality_tolerance(const CMatrix& a);

bool is_normal(const CMatrix& a);

CMatrix add(const CMatrix& a, const CMatrix& b);
CMatrix sub(const CMatrix& a, const CMatrix& b);
CMatrix mul(const CMatrix& a, const CMatrix& b);
/// Conjugate transpose; swaps the row/column offsets.
CMatrix adjoint(const CMatrix& a);
/// Plain transpose, no conjugation; swaps the row/column offsets.
CMatrix transpose(const CMatrix& a);
CMatrix scale(const CMatrix& a, Complex factor);

/// Validates the Sylvester problem BX - XA = Q: A square n x n, B square
/// m x m, Q is m x n, and the section offsets line up (Q rows live in B's
/// index space, Q columns in A's).
void require_sylvester_shapes(const CMatrix& a, const CMatrix& b, const CMatrix& q);

enum class MatOp { Add, Sub, Mul, Adjoint, Scale };

/// Dispatcher over the binary/unary arithmetic above. Adjoint ignores `b`;
/// Scale uses `factor` and ignores `b`.
CMatrix mat_apply(const CMatrix& a, const CMatrix& b, MatOp op, Complex factor = Complex(1, 0));

}  // namespace sylvan
