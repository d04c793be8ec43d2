#pragma once

#include <limits>

#include "sylvan/cmatrix.hpp"

namespace sylvan {

enum class AlgebraKind {
  GrochenigSchur,
  BaskakovGohbergSjostrand,
  Beurling,
  OperatorL2,
};

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Which localized-matrix norm to evaluate, with its weight parameters.
/// `admissible` flags alpha > 1 - 1/p, the d = 1 inverse-closedness condition.
struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::OperatorL2;
  double p = kInfinity;
  double alpha = 0.0;
  bool admissible = false;

  static AlgebraSpec make(AlgebraKind kind, double p = kInfinity, double alpha = 0.0);

  static AlgebraSpec operator_l2() { return make(AlgebraKind::OperatorL2); }
};

/// Polynomial weight u_alpha(i, j) = (1 + |i - j|)^alpha on logical indices.
double weight(Index i, Index j, double alpha);

/// sigma_max of the finite section (the l2 operator norm).
double operator_norm(const CMatrix& a);

/// Evaluate the named norm on a square section with equal offsets.
/// Sums and sups run over the stored window only.
double algebra_norm(const CMatrix& a, const AlgebraSpec& spec);

struct InclusionCheck {
  double gs = 0, bgs = 0, beurling = 0;
  bool ordered = false;  // gs <= bgs <= beurling up to 1e-12 relative slack
};

/// The three weighted norms plus the ordering verdict of the inclusion chain.
InclusionCheck inclusion_check(const CMatrix& a, double p, double alpha);

/// Empirical probe of ||A^m|| <= D ||A||^(m-theta) ||A||_op^theta:
/// ratio is a lower estimate of the constant D.
struct DifferentialProbe {
  int m = 2;
  double theta = 1.0;
  double ratio = 0.0;
};

DifferentialProbe differential_ratio(const CMatrix& a, const AlgebraSpec& spec, int m, double theta);

}  // namespace sylvan
