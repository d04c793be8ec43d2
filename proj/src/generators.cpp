#include "sylvan/generators.hpp"

#include <cmath>

#include "sylvan/error.hpp"

namespace sylvan {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

UniformSource::UniformSource(std::uint64_t seed) : engine_(0) {
  std::uint64_t s = seed;
  engine_.seed(splitmix64(s));
}

double UniformSource::next() {
  const std::uint64_t word = engine_();
  const double unit = static_cast<double>(word >> 11) * 0x1.0p-53;  // [0, 1)
  return 2.0 * unit - 1.0;
}

Complex UniformSource::next_complex() {
  const double re = next();
  const double im = next();
  return {re, im};
}

namespace {

double damping(Index distance, double decay_alpha) {
  return std::pow(1.0 + static_cast<double>(distance), -decay_alpha - 1.0);
}

void validate(const GenSpec& spec) {
  if (spec.n < 1) raise(ErrorCode::InvalidSpec, "generator size must be >= 1");
  if (spec.band < 0) raise(ErrorCode::InvalidSpec, "band must be >= 0");
  if (!(spec.decay_alpha >= 0.0) || !std::isfinite(spec.decay_alpha))
    raise(ErrorCode::InvalidSpec, "decay_alpha must be finite and >= 0");
  if (!(spec.spread > 0.0) || !std::isfinite(spec.spread))
    raise(ErrorCode::InvalidSpec, "spread must be finite and > 0");
  if (!std::isfinite(spec.shift.real()) || !std::isfinite(spec.shift.imag()))
    raise(ErrorCode::InvalidSpec, "shift must be finite");
}

CMatrix gen_diagonal(const GenSpec& spec) {
  UniformSource rng(spec.seed);
  const auto n = static_cast<Eigen::Index>(spec.n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(j, j) = spec.spread * rng.next_complex();
  return CMatrix(std::move(m));
}

CMatrix gen_hermitian_banded(const GenSpec& spec) {
  UniformSource rng(spec.seed);
  const auto n = static_cast<Eigen::Index>(spec.n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  // Fixed draw order: the diagonal first, then each row's band to the right.
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = spec.spread * rng.next();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index hi = std::min(n - 1, i + static_cast<Eigen::Index>(spec.band));
    for (Eigen::Index j = i + 1; j <= hi; ++j) {
      const Complex v = spec.spread * damping(j - i, spec.decay_alpha) * rng.next_complex();
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return CMatrix(std::move(m));
}

CMatrix gen_circulant(const GenSpec& spec) {
  UniformSource rng(spec.seed);
  const auto n = static_cast<Eigen::Index>(spec.n);
  std::vector<Complex> first_row(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const Index circ = std::min<Index>(j, spec.n - j);  // circular distance to the diagonal
    first_row[static_cast<std::size_t>(j)] = spec.spread * damping(circ, spec.decay_alpha) * rng.next_complex();
  }
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = first_row[static_cast<std::size_t>((j - i + n) % n)];
  return CMatrix(std::move(m));
}

}  // namespace

CMatrix random_dense(Index nrows, Index ncols, std::uint64_t seed, double spread) {
  if (nrows < 1 || ncols < 1) raise(ErrorCode::InvalidSpec, "random_dense size must be >= 1");
  if (!(spread > 0.0) || !std::isfinite(spread))
    raise(ErrorCode::InvalidSpec, "spread must be finite and > 0");
  UniformSource rng(seed);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(nrows), static_cast<Eigen::Index>(ncols));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = spread * rng.next_complex();
  return CMatrix(std::move(m));
}

CMatrix shifted_copy(const CMatrix& a, Complex shift) {
  if (!a.square()) raise(ErrorCode::NonSquare, "can only shift a square matrix");
  Eigen::MatrixXcd m = a.mat();
  m.diagonal().array() += shift;
  return CMatrix(std::move(m), a.row_offset(), a.col_offset());
}

CMatrix generate(const GenSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case GenFamily::Diagonal:
      return gen_diagonal(spec);
    case GenFamily::HermitianBanded:
      return gen_hermitian_banded(spec);
    case GenFamily::Circulant:
      return gen_circulant(spec);
    case GenFamily::ShiftedCopy: {
      if (spec.base == GenFamily::ShiftedCopy)
        raise(ErrorCode::InvalidSpec, "shifted_copy cannot stack on itself");
      GenSpec base = spec;
      base.family = spec.base;
      return shifted_copy(generate(base), spec.shift);
    }
  }
  raise(ErrorCode::InvalidSpec, "unknown generator family");
}

}  // namespace sylvan
