#include "sylvan/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "sylvan/error.hpp"

namespace sylvan {

GaussLegendre gauss_legendre(int order) {
  if (order < 1) raise(ErrorCode::InvalidSpec, "Gauss-Legendre order must be >= 1");
  const auto q = static_cast<std::size_t>(order);
  GaussLegendre rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (std::size_t i = 0; i < q; ++i) {
    // Chebyshev-angle initial guess, then Newton on the Legendre recurrence.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(q) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;  // P_0, P_1
      for (int n = 2; n <= order; ++n) {
        const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(order) * (p0 - x * p1) / (1.0 - x * x);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

ContourQuadrature build_quadrature(const GridDomain& dom, int order) {
  if (dom.loops.empty()) raise(ErrorCode::DomainInvalid, "domain has no boundary to integrate over");
  const GaussLegendre rule = gauss_legendre(order);
  ContourQuadrature quad;
  quad.order = order;
  std::size_t edge_count = 0;
  for (const Loop& loop : dom.loops) edge_count += loop.vertices.size();
  quad.segments.reserve(edge_count);
  quad.nodes.reserve(edge_count * rule.nodes.size());
  quad.weights.reserve(edge_count * rule.nodes.size());
  for (const Loop& loop : dom.loops) {
    const std::size_t n = loop.vertices.size();
    for (std::size_t e = 0; e < n; ++e) {
      const Complex za = loop.vertices[e];
      const Complex zb = loop.vertices[(e + 1) % n];
      quad.segments.emplace_back(za, zb);
      const Complex mid = 0.5 * (za + zb);
      const Complex half = 0.5 * (zb - za);
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        quad.nodes.push_back(mid + half * rule.nodes[j]);
        quad.weights.push_back(half * rule.weights[j]);
      }
    }
  }
  return quad;
}

Complex winding_selfcheck(const ContourQuadrature& quad, Complex z0) {
  const double guard = 1e-14;
  Complex sum = 0.0;
  for (std::size_t j = 0; j < quad.nodes.size(); ++j) {
    const Complex d = quad.nodes[j] - z0;
    if (std::abs(d) < guard) raise(ErrorCode::NodeSingular, "winding target coincides with a quadrature node");
    sum += quad.weights[j] / d;
  }
  return sum / Complex(0.0, 2.0 * std::numbers::pi);
}

}  // namespace sylvan
