#pragma once

#include <vector>

#include "sylvan/cauchy_domain.hpp"

namespace sylvan {

/// Gauss-Legendre rule on [-1, 1]. order = 1 degenerates to the midpoint rule
/// (node 0, weight 2).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int order);

/// Quadrature of a contour integral over the domain boundary. Each unit grid
/// edge of every loop is one segment carrying `order` Gauss-Legendre points;
/// segment s owns nodes [s * order, (s + 1) * order). Weights are the plain
/// dz factors (z_end - z_start) * gauss_weight / 2, so sum(f(node) * weight)
/// approximates the raw contour integral and the Cauchy normalization
/// 1/(2 pi i) is applied at summation time by the caller.
struct ContourQuadrature {
  int order = 0;
  std::vector<std::pair<Complex, Complex>> segments;  // (z_start, z_end), loop orientation
  std::vector<Complex> nodes;
  std::vector<Complex> weights;
};

ContourQuadrature build_quadrature(const GridDomain& dom, int order);

/// (1/(2 pi i)) sum w_j / (z_j - z0): the quadrature's own estimate of the
/// winding number about z0. Throws Error(NodeSingular) if z0 (nearly)
/// coincides with a node.
Complex winding_selfcheck(const ContourQuadrature& quad, Complex z0);

}  // namespace sylvan
