#include "sylvan/algebra_norms.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <vector>

namespace sylvan {

AlgebraSpec AlgebraSpec::make(AlgebraKind kind, double p, double alpha) {
  if (!(p >= 1.0)) raise(ErrorCode::InvalidSpec, "p must satisfy p >= 1 (or be infinite)");
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    raise(ErrorCode::InvalidSpec, "alpha must be finite and >= 0");
  AlgebraSpec spec;
  spec.kind = kind;
  spec.p = p;
  spec.alpha = alpha;
  spec.admissible = alpha > 1.0 - 1.0 / p;  // 1/inf == 0
  return spec;
}

double weight(Index i, Index j, double alpha) {
  if (!(alpha >= 0.0)) raise(ErrorCode::InvalidSpec, "alpha must be >= 0");
  const double dist = static_cast<double>(i >= j ? i - j : j - i);
  return std::pow(1.0 + dist, alpha);
}

double operator_norm(const CMatrix& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.mat());
  return svd.singularValues()(0);
}

namespace {

// lp norm of nonnegative values, stable under large p via max scaling.
double lp_norm(const std::vector<double>& values, double p) {
  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, v);
  if (vmax == 0.0) return 0.0;
  if (std::isinf(p)) return vmax;
  if (p == 1.0) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  double s = 0.0;
  for (double v : values) {
    if (v > 0.0) s += std::pow(v / vmax, p);
  }
  return vmax * std::pow(s, 1.0 / p);
}

void require_section(const CMatrix& a, const char* who) {
  if (!a.square()) raise(ErrorCode::NonSquare, std::string(who) + " requires a square matrix");
  if (a.row_offset() != a.col_offset())
    raise(ErrorCode::NonSquare, std::string(who) + " requires equal row/column offsets");
}

double grochenig_schur_norm(const Eigen::MatrixXcd& m, const std::vector<double>& u, double p) {
  const Index n = m.rows();
  double best = 0.0;
  std::vector<double> line(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j)
      line[static_cast<size_t>(j)] = std::abs(m(i, j)) * u[static_cast<size_t>(std::abs(i - j))];
    best = std::max(best, lp_norm(line, p));
  }
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i)
      line[static_cast<size_t>(i)] = std::abs(m(i, j)) * u[static_cast<size_t>(std::abs(i - j))];
    best = std::max(best, lp_norm(line, p));
  }
  return best;
}

// Per-diagonal weighted sups, indexed by k = i - j in [-(n-1), n-1].
std::vector<double> diagonal_sups(const Eigen::MatrixXcd& m, const std::vector<double>& u) {
  const Index n = m.rows();
  std::vector<double> sups(static_cast<size_t>(2 * n - 1), 0.0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const size_t slot = static_cast<size_t>(i - j + n - 1);
      const double v = std::abs(m(i, j)) * u[static_cast<size_t>(std::abs(i - j))];
      sups[slot] = std::max(sups[slot], v);
    }
  return sups;
}

double bgs_norm(const Eigen::MatrixXcd& m, const std::vector<double>& u, double p) {
  return lp_norm(diagonal_sups(m, u), p);
}

double beurling_norm(const Eigen::MatrixXcd& m, const std::vector<double>& u, double p) {
  const Index n = m.rows();
  // sup over |i-j| >= d of |a|u, via suffix maxima over the distance index.
  std::vector<double> by_distance(static_cast<size_t>(n), 0.0);
  const std::vector<double> sups = diagonal_sups(m, u);
  for (Index k = -(n - 1); k <= n - 1; ++k) {
    const size_t d = static_cast<size_t>(std::abs(k));
    by_distance[d] = std::max(by_distance[d], sups[static_cast<size_t>(k + n - 1)]);
  }
  for (Index d = n - 2; d >= 0; --d)
    by_distance[static_cast<size_t>(d)] =
        std::max(by_distance[static_cast<size_t>(d)], by_distance[static_cast<size_t>(d + 1)]);
  std::vector<double> terms(static_cast<size_t>(2 * n - 1));
  for (Index k = -(n - 1); k <= n - 1; ++k)
    terms[static_cast<size_t>(k + n - 1)] = by_distance[static_cast<size_t>(std::abs(k))];
  return lp_norm(terms, p);
}

std::vector<double> weight_table(Index n, double alpha) {
  std::vector<double> u(static_cast<size_t>(n));
  for (Index d = 0; d < n; ++d) u[static_cast<size_t>(d)] = std::pow(1.0 + static_cast<double>(d), alpha);
  return u;
}

}  // namespace

double algebra_norm(const CMatrix& a, const AlgebraSpec& spec) {
  require_section(a, "algebra_norm");
  if (!(spec.p >= 1.0)) raise(ErrorCode::InvalidSpec, "p must satisfy p >= 1");
  if (!(spec.alpha >= 0.0)) raise(ErrorCode::InvalidSpec, "alpha must be >= 0");
  if (spec.kind == AlgebraKind::OperatorL2) return operator_norm(a);
  const std::vector<double> u = weight_table(a.nrows(), spec.alpha);
  switch (spec.kind) {
    case AlgebraKind::GrochenigSchur: return grochenig_schur_norm(a.mat(), u, spec.p);
    case AlgebraKind::BaskakovGohbergSjostrand: return bgs_norm(a.mat(), u, spec.p);
    case AlgebraKind::Beurling: return beurling_norm(a.mat(), u, spec.p);
    case AlgebraKind::OperatorL2: break;
  }
  raise(ErrorCode::InvalidSpec, "unknown algebra kind");
}

InclusionCheck inclusion_check(const CMatrix& a, double p, double alpha) {
  InclusionCheck out;
  out.gs = algebra_norm(a, AlgebraSpec::make(AlgebraKind::GrochenigSchur, p, alpha));
  out.bgs = algebra_norm(a, AlgebraSpec::make(AlgebraKind::BaskakovGohbergSjostrand, p, alpha));
  out.beurling = algebra_norm(a, AlgebraSpec::make(AlgebraKind::Beurling, p, alpha));
  const double slack = 1.0 + 1e-12;
  out.ordered = out.gs <= out.bgs * slack && out.bgs <= out.beurling * slack;
  return out;
}

DifferentialProbe differential_ratio(const CMatrix& a, const AlgebraSpec& spec, int m, double theta) {
  if (m < 2) raise(ErrorCode::InvalidSpec, "differential probe needs m >= 2");
  if (!(theta > 0.0) || !(theta <= static_cast<double>(m - 1)))
    raise(ErrorCode::InvalidSpec, "differential probe needs 0 < theta <= m-1");
  require_section(a, "differential_ratio");
  const double norm_a = algebra_norm(a, spec);
  const double norm_op = operator_norm(a);
  if (norm_a == 0.0 || norm_op == 0.0)
    raise(ErrorCode::ZeroMatrix, "differential probe undefined for the zero matrix");
  Eigen::MatrixXcd power = a.mat();
  for (int k = 1; k < m; ++k) power = power * a.mat();
  const double norm_power = algebra_norm(CMatrix(power, a.row_offset(), a.col_offset()), spec);
  DifferentialProbe probe;
  probe.m = m;
  probe.theta = theta;
  probe.ratio = norm_power / (std::pow(norm_a, static_cast<double>(m) - theta) * std::pow(norm_op, theta));
  return probe;
}

}  // namespace sylvan
