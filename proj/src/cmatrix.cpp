#include "sylvan/cmatrix.hpp"

#include <cmath>
#include <utility>

namespace sylvan {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::EigFailure: return "EigFailure";
    case ErrorCode::SpectraOverlap: return "SpectraOverlap";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::DomainInvalid: return "DomainInvalid";
    case ErrorCode::NodeSingular: return "NodeSingular";
    case ErrorCode::ResolventSingular: return "ResolventSingular";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::NonFiniteH: return "NonFiniteH";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

CMatrix::CMatrix(Eigen::MatrixXcd values, Index row_offset, Index col_offset)
    : values_(std::move(values)), row_offset_(row_offset), col_offset_(col_offset) {
  if (values_.rows() < 1 || values_.cols() < 1)
    raise(ErrorCode::DimensionMismatch, "matrix must have at least one row and one column");
  if (!values_.allFinite()) raise(ErrorCode::NonFinite, "matrix entries must be finite");
}

CMatrix CMatrix::zero(Index nrows, Index ncols, Index row_offset, Index col_offset) {
  return CMatrix(Eigen::MatrixXcd::Zero(nrows, ncols), row_offset, col_offset);
}

CMatrix CMatrix::identity(Index n, Index offset) {
  return CMatrix(Eigen::MatrixXcd::Identity(n, n), offset, offset);
}

CMatrix CMatrix::from_entries(Index nrows, Index ncols, const std::vector<Complex>& row_major,
                              Index row_offset, Index col_offset) {
  if (nrows < 1 || ncols < 1)
    raise(ErrorCode::DimensionMismatch, "matrix must have at least one row and one column");
  if (static_cast<Index>(row_major.size()) != nrows * ncols)
    raise(ErrorCode::DimensionMismatch, "entry count does not match nrows*ncols");
  Eigen::MatrixXcd m(nrows, ncols);
  for (Index r = 0; r < nrows; ++r)
    for (Index c = 0; c < ncols; ++c) m(r, c) = row_major[static_cast<size_t>(r * ncols + c)];
  return CMatrix(std::move(m), row_offset, col_offset);
}

double normality_residual(const CMatrix& a) {
  if (!a.square()) raise(ErrorCode::NonSquare, "normality_residual requires a square matrix");
  const Eigen::MatrixXcd& m = a.mat();
  return (m.adjoint() * m - m * m.adjoint()).norm();
}

double normality_tolerance(const CMatrix& a) {
  const double f = a.frobenius();
  return 1e-10 * (1.0 + f * f);
}

bool is_normal(const CMatrix& a) { return normality_residual(a) <= normality_tolerance(a); }

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols())
    raise(ErrorCode::DimensionMismatch, std::string(op) + ": shapes differ");
  if (a.row_offset() != b.row_offset() || a.col_offset() != b.col_offset())
    raise(ErrorCode::DimensionMismatch, std::string(op) + ": index offsets differ");
}

}  // namespace

CMatrix add(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "add");
  return CMatrix(a.mat() + b.mat(), a.row_offset(), a.col_offset());
}

CMatrix sub(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "sub");
  return CMatrix(a.mat() - b.mat(), a.row_offset(), a.col_offset());
}

CMatrix mul(const CMatrix& a, const CMatrix& b) {
  if (a.ncols() != b.nrows()) raise(ErrorCode::DimensionMismatch, "mul: inner dimensions differ");
  if (a.col_offset() != b.row_offset())
    raise(ErrorCode::DimensionMismatch, "mul: inner index offsets differ");
  return CMatrix(a.mat() * b.mat(), a.row_offset(), b.col_offset());
}

CMatrix adjoint(const CMatrix& a) {
  return CMatrix(a.mat().adjoint(), a.col_offset(), a.row_offset());
}

CMatrix transpose(const CMatrix& a) {
  return CMatrix(a.mat().transpose(), a.col_offset(), a.row_offset());
}

void require_sylvester_shapes(const CMatrix& a, const CMatrix& b, const CMatrix& q) {
  if (!a.square() || !b.square()) raise(ErrorCode::NonSquare, "A and B must be square");
  if (q.nrows() != b.nrows() || q.ncols() != a.nrows())
    raise(ErrorCode::DimensionMismatch, "Q must be (dim B) x (dim A)");
  if (a.row_offset() != a.col_offset() || b.row_offset() != b.col_offset())
    raise(ErrorCode::DimensionMismatch, "A and B must be index-aligned sections");
  if (q.row_offset() != b.row_offset() || q.col_offset() != a.col_offset())
    raise(ErrorCode::DimensionMismatch, "Q offsets must match B rows and A columns");
}

CMatrix scale(const CMatrix& a, Complex factor) {
  if (!std::isfinite(factor.real()) || !std::isfinite(factor.imag()))
    raise(ErrorCode::NonFinite, "scale factor must be finite");
  return CMatrix(a.mat() * factor, a.row_offset(), a.col_offset());
}

CMatrix mat_apply(const CMatrix& a, const CMatrix& b, MatOp op, Complex factor) {
  switch (op) {
    case MatOp::Add: return add(a, b);
    case MatOp::Sub: return sub(a, b);
    case MatOp::Mul: return mul(a, b);
    case MatOp::Adjoint: return adjoint(a);
    case MatOp::Scale: return scale(a, factor);
  }
  raise(ErrorCode::InvalidSpec, "unknown matrix operation");
}

}  // namespace sylvan
