#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "sylvan/quadrature.hpp"

using namespace sylvan;
using doctest::Approx;

namespace {

SpectrumSet points(std::vector<Complex> values) {
  SpectrumSet s;
  s.values = std::move(values);
  s.is_normal = true;
  return s;
}

Separation make_sep(double delta, double op_norm_a) {
  Separation sep;
  sep.delta_cheb = delta;
  sep.delta_eucl = delta;
  sep.delta_prime = delta / 3.0;
  sep.n0 = static_cast<Index>(std::floor((op_norm_a + sep.delta_prime) / sep.delta_prime));
  return sep;
}

GridDomain unit_domain() {
  return build_domain(points({Complex(0, 0)}), make_sep(1.0, 0.0));
}

// Contour integral of f over the quadrature, with the 1/(2 pi i) factor.
template <typename F>
Complex cauchy_sum(const ContourQuadrature& quad, F f) {
  Complex acc(0, 0);
  for (size_t j = 0; j < quad.nodes.size(); ++j) acc += f(quad.nodes[j]) * quad.weights[j];
  return acc / Complex(0, 2 * std::acos(-1.0));
}

}  // namespace

TEST_CASE("order 1 is the midpoint rule") {
  const GaussLegendre gl = gauss_legendre(1);
  REQUIRE(gl.nodes.size() == 1);
  CHECK(gl.nodes[0] == Approx(0.0));
  CHECK(gl.weights[0] == Approx(2.0).epsilon(1e-15));
}

TEST_CASE("small orders match the classical nodes") {
  const GaussLegendre g2 = gauss_legendre(2);
  REQUIRE(g2.nodes.size() == 2);
  CHECK(std::abs(g2.nodes[0]) == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(std::abs(g2.nodes[1]) == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(g2.weights[0] == Approx(1.0).epsilon(1e-14));
  CHECK(g2.weights[1] == Approx(1.0).epsilon(1e-14));

  const GaussLegendre g3 = gauss_legendre(3);
  REQUIRE(g3.nodes.size() == 3);
  std::vector<double> sorted = g3.nodes;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted[0] == Approx(-std::sqrt(0.6)).epsilon(1e-14));
  CHECK(sorted[1] == Approx(0.0));
  CHECK(sorted[2] == Approx(std::sqrt(0.6)).epsilon(1e-14));
  double wsum = 0.0;
  for (double w : g3.weights) wsum += w;
  CHECK(wsum == Approx(2.0).epsilon(1e-14));
}

TEST_CASE("polynomial exactness up to degree 2q - 1") {
  for (int q : {2, 4, 6, 10}) {
    const GaussLegendre gl = gauss_legendre(q);
    for (int deg = 0; deg <= 2 * q - 1; ++deg) {
      double got = 0.0;
      for (size_t j = 0; j < gl.nodes.size(); ++j) got += gl.weights[j] * std::pow(gl.nodes[j], deg);
      const double exact = (deg % 2 == 0) ? 2.0 / (deg + 1) : 0.0;
      CHECK(got == Approx(exact).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("invalid orders are rejected") {
  CHECK_THROWS_AS(gauss_legendre(0), Error);
  CHECK_THROWS_AS(gauss_legendre(-3), Error);
}

TEST_CASE("contour quadrature counts and layout") {
  const GridDomain dom = unit_domain();  // one loop, 12 unit edges of side 1/3
  for (int q : {1, 2, 4, 8}) {
    const ContourQuadrature quad = build_quadrature(dom, q);
    CHECK(quad.order == q);
    CHECK(quad.segments.size() == 12);
    CHECK(quad.nodes.size() == quad.segments.size() * static_cast<size_t>(q));
    CHECK(quad.weights.size() == quad.nodes.size());
    // Every node lies strictly inside its own segment.
    for (size_t s = 0; s < quad.segments.size(); ++s) {
      const auto [za, zb] = quad.segments[s];
      for (int j = 0; j < q; ++j) {
        const Complex z = quad.nodes[s * static_cast<size_t>(q) + static_cast<size_t>(j)];
        const double t = ((z - za) / (zb - za)).real();
        CHECK(t > 0.0);
        CHECK(t < 1.0);
        CHECK(std::abs(((z - za) / (zb - za)).imag()) <= 1e-15);
      }
    }
  }
}

TEST_CASE("segment endpoints chain around each loop") {
  const GridDomain dom = unit_domain();
  const ContourQuadrature quad = build_quadrature(dom, 3);
  Complex total(0, 0);
  for (const auto& [za, zb] : quad.segments) total += zb - za;
  CHECK(std::abs(total) <= 1e-15);

  // Weights integrate dz: sum of weights equals the integral of 1 dz = 0.
  Complex wsum(0, 0);
  for (const Complex& w : quad.weights) wsum += w;
  CHECK(std::abs(wsum) <= 1e-15);
}

TEST_CASE("doubling the order doubles the node count") {
  const GridDomain dom = unit_domain();
  const ContourQuadrature q4 = build_quadrature(dom, 4);
  const ContourQuadrature q8 = build_quadrature(dom, 8);
  CHECK(q8.nodes.size() == 2 * q4.nodes.size());
  CHECK(q8.segments.size() == q4.segments.size());
}

TEST_CASE("winding selfcheck: one inside, zero outside") {
  const GridDomain dom = unit_domain();
  const ContourQuadrature quad = build_quadrature(dom, 16);
  CHECK(std::abs(winding_selfcheck(quad, Complex(0, 0)) - 1.0) <= 1e-10);
  CHECK(std::abs(winding_selfcheck(quad, Complex(0.2, -0.1)) - 1.0) <= 1e-10);
  CHECK(std::abs(winding_selfcheck(quad, Complex(2.0, 1.0))) <= 1e-10);
  CHECK(std::abs(winding_selfcheck(quad, Complex(-1.0, -1.0))) <= 1e-10);
}

TEST_CASE("quadrature error drops by at least 10x from order 4 to 8") {
  const GridDomain dom = unit_domain();
  const ContourQuadrature q4 = build_quadrature(dom, 4);
  const ContourQuadrature q8 = build_quadrature(dom, 8);
  // Cauchy integral of 1/(z - z0) for z0 inside, probed at clearance >= delta'.
  const Complex z0(0.1, 0.05);
  const double e4 = std::abs(winding_selfcheck(q4, z0) - 1.0);
  const double e8 = std::abs(winding_selfcheck(q8, z0) - 1.0);
  CHECK(e8 * 10.0 <= e4);

  // Same behaviour for an analytic moment: (1/2 pi i) integral z / (z - z0) dz = z0.
  const Complex m4 = cauchy_sum(q4, [&](Complex z) { return z / (z - z0); });
  const Complex m8 = cauchy_sum(q8, [&](Complex z) { return z / (z - z0); });
  CHECK(std::abs(m8 - z0) * 10.0 <= std::abs(m4 - z0));
}

TEST_CASE("cauchy moments reproduce analytic values at high order") {
  const GridDomain dom = unit_domain();
  const ContourQuadrature quad = build_quadrature(dom, 24);
  const Complex z0(-0.15, 0.2);
  // Derivative moment: (1/2 pi i) integral 1 / (z - z0)^2 dz = 0 for... the
  // winding derivative; and the k-th moment of z about an interior pole.
  const Complex mk = cauchy_sum(quad, [&](Complex z) { return (z * z) / (z - z0); });
  CHECK(std::abs(mk - z0 * z0) <= 1e-10);
  const Complex outside = cauchy_sum(quad, [&](Complex z) { return 1.0 / (z - Complex(5, 5)); });
  CHECK(std::abs(outside) <= 1e-12);
}

TEST_CASE("selfcheck refuses a pole sitting on a node") {
  const GridDomain dom = unit_domain();
  const ContourQuadrature quad = build_quadrature(dom, 4);
  REQUIRE(!quad.nodes.empty());
  CHECK_THROWS_AS(winding_selfcheck(quad, quad.nodes[0]), Error);
  CHECK_THROWS_AS(winding_selfcheck(quad, quad.nodes[0] + Complex(5e-15, 0)), Error);
}

TEST_CASE("build_quadrature validates its inputs") {
  const GridDomain dom = unit_domain();
  CHECK_THROWS_AS(build_quadrature(dom, 0), Error);
  GridDomain empty;
  empty.side = 1.0;
  CHECK_THROWS_AS(build_quadrature(empty, 4), Error);
}
