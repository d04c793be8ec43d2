#include "sylvan/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

namespace sylvan {

double SpectrumSet::max_abs() const {
  double m = 0.0;
  for (const Complex& v : values) m = std::max(m, std::abs(v));
  return m;
}

namespace {

bool exactly_hermitian(const Eigen::MatrixXcd& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i; j < m.cols(); ++j)
      if (m(i, j) != std::conj(m(j, i))) return false;
  return true;
}

void sort_lexicographic(std::vector<Complex>& values) {
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

SpectrumSet spectrum(const CMatrix& a) {
  if (!a.square()) raise(ErrorCode::NonSquare, "spectrum requires a square matrix");
  SpectrumSet out;
  out.normality_residual = normality_residual(a);
  out.is_normal = out.normality_residual <= normality_tolerance(a);
  const Index n = a.nrows();
  out.values.resize(static_cast<size_t>(n));
  if (exactly_hermitian(a.mat())) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.mat(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      raise(ErrorCode::EigFailure, "self-adjoint eigensolver did not converge");
    for (Index i = 0; i < n; ++i) out.values[static_cast<size_t>(i)] = Complex(solver.eigenvalues()(i), 0.0);
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a.mat(), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
      raise(ErrorCode::EigFailure, "complex eigensolver did not converge");
    for (Index i = 0; i < n; ++i) out.values[static_cast<size_t>(i)] = solver.eigenvalues()(i);
    sort_lexicographic(out.values);
  }
  return out;
}

Separation separation(const SpectrumSet& sa, const SpectrumSet& sb, double op_norm_a) {
  if (sa.values.empty() || sb.values.empty())
    raise(ErrorCode::DegenerateSpectrum, "separation needs nonempty spectra");
  double cheb = std::numeric_limits<double>::infinity();
  double eucl = std::numeric_limits<double>::infinity();
  for (const Complex& a : sa.values)
    for (const Complex& b : sb.values) {
      cheb = std::min(cheb, std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag())));
      eucl = std::min(eucl, std::abs(a - b));
    }
  const double scale = std::max(sa.max_abs(), sb.max_abs());
  if (cheb <= 1e-9 * (1.0 + scale))
    raise(ErrorCode::SpectraOverlap, "spectra are not disjoint at the overlap tolerance");
  Separation sep;
  sep.delta_cheb = cheb;
  sep.delta_eucl = eucl;
  sep.delta_prime = cheb / 3.0;
  sep.n0 = static_cast<Index>(std::floor((op_norm_a + sep.delta_prime) / sep.delta_prime));
  return sep;
}

}  // namespace sylvan
