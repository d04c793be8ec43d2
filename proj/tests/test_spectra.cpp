#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sylvan/algebra_norms.hpp"
#include "sylvan/generators.hpp"
#include "sylvan/spectra.hpp"

using namespace sylvan;
using doctest::Approx;

namespace {

const Complex I(0.0, 1.0);

SpectrumSet points(std::vector<Complex> values) {
  SpectrumSet s;
  s.values = std::move(values);
  s.is_normal = true;
  return s;
}

double min_cheb(const SpectrumSet& sa, const SpectrumSet& sb) {
  double best = kInfinity;
  for (const Complex& a : sa.values)
    for (const Complex& b : sb.values)
      best = std::min(best, std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag())));
  return best;
}

}  // namespace

TEST_CASE("diagonal spectrum is the diagonal, sorted") {
  const CMatrix a = CMatrix::from_entries(
      3, 3, {3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0});
  const SpectrumSet s = spectrum(a);
  REQUIRE(s.values.size() == 3);
  CHECK(s.values[0].real() == Approx(1.0).epsilon(1e-14));
  CHECK(s.values[1].real() == Approx(2.0).epsilon(1e-14));
  CHECK(s.values[2].real() == Approx(3.0).epsilon(1e-14));
  CHECK(s.is_normal);
}

TEST_CASE("cyclic shift has the fourth roots of unity") {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(4, 4);
  for (Index i = 0; i < 4; ++i) p(i, (i + 1) % 4) = 1.0;
  const SpectrumSet s = spectrum(CMatrix(p));
  REQUIRE(s.values.size() == 4);
  // Match as a multiset: the +-i pair carries ~1e-17 real-part noise, so the
  // lexicographic sort order between those two is not predictable.
  std::vector<Complex> remaining = s.values;
  for (const Complex root : {Complex(-1, 0), Complex(0, -1), Complex(0, 1), Complex(1, 0)}) {
    auto best = remaining.end();
    for (auto it = remaining.begin(); it != remaining.end(); ++it)
      if (best == remaining.end() || std::abs(*it - root) < std::abs(*best - root)) best = it;
    REQUIRE(best != remaining.end());
    CHECK(std::abs(*best - root) <= 1e-12);
    remaining.erase(best);
  }
  CHECK(s.is_normal);
}

TEST_CASE("symmetric 2x2 example: {1, 3}") {
  const CMatrix a = CMatrix::from_entries(2, 2, {2.0, 1.0, 1.0, 2.0});
  const SpectrumSet s = spectrum(a);
  REQUIRE(s.values.size() == 2);
  CHECK(s.values[0].real() == Approx(1.0).epsilon(1e-13));
  CHECK(s.values[0].imag() == 0.0);  // self-adjoint path: exactly real
  CHECK(s.values[1].real() == Approx(3.0).epsilon(1e-13));
}

TEST_CASE("spectrum rejects non-square input") {
  CHECK_THROWS_AS(spectrum(CMatrix::zero(2, 3)), Error);
}

TEST_CASE("separation example: {0} vs {3+4i}") {
  const Separation sep = separation(points({Complex(0, 0)}), points({Complex(3, 4)}), 0.0);
  CHECK(sep.delta_cheb == Approx(4.0).epsilon(1e-15));
  CHECK(sep.delta_eucl == Approx(5.0).epsilon(1e-15));
  CHECK(sep.delta_prime == Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(sep.n0 == 1);
}

TEST_CASE("separation example: {0,1} vs {2,5}") {
  const Separation sep =
      separation(points({Complex(0, 0), Complex(1, 0)}), points({Complex(2, 0), Complex(5, 0)}), 1.0);
  CHECK(sep.delta_cheb == Approx(1.0).epsilon(1e-15));
  CHECK(sep.delta_eucl == Approx(1.0).epsilon(1e-15));
  CHECK(sep.delta_prime == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(sep.n0 == 4);  // floor((1 + 1/3) / (1/3))
}

TEST_CASE("overlapping spectra are rejected") {
  CHECK_THROWS_AS(separation(points({Complex(1, 0)}), points({Complex(1, 0)}), 1.0), Error);
  // Within the relative overlap tolerance 1e-9 (1 + max |lambda|).
  CHECK_THROWS_AS(
      separation(points({Complex(100.0, 0)}), points({Complex(100.0 + 5e-8, 0)}), 100.0), Error);
  // Just beyond it: accepted.
  CHECK_NOTHROW(separation(points({Complex(100.0, 0)}), points({Complex(100.0 + 1e-6, 0)}), 100.0));
  CHECK_THROWS_AS(separation(points({}), points({Complex(1, 0)}), 0.0), Error);
}

TEST_CASE("chebyshev and euclidean distances are symmetric and sandwiched") {
  UniformSource src(2024);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> va, vb;
    for (int k = 0; k < 5; ++k) va.push_back(src.next_complex() * 3.0);
    for (int k = 0; k < 5; ++k) vb.push_back(src.next_complex() * 3.0 + Complex(10.0, 0.0));
    const SpectrumSet sa = points(va);
    const SpectrumSet sb = points(vb);
    const Separation ab = separation(sa, sb, 3.0);
    const Separation ba = separation(sb, sa, 3.0);
    CHECK(ab.delta_cheb == ba.delta_cheb);
    CHECK(ab.delta_eucl == ba.delta_eucl);
    CHECK(ab.delta_cheb <= ab.delta_eucl * (1.0 + 1e-15));
    CHECK(ab.delta_eucl <= ab.delta_cheb * std::sqrt(2.0) * (1.0 + 1e-15));
    CHECK(ab.delta_cheb == Approx(min_cheb(sa, sb)).epsilon(1e-15));
  }
}

TEST_CASE("separation is translation invariant") {
  const std::vector<Complex> va = {Complex(0, 0), Complex(1, 2)};
  const std::vector<Complex> vb = {Complex(4, -1), Complex(6, 3)};
  const Complex shift(7.5, -2.25);
  std::vector<Complex> va_s = va, vb_s = vb;
  for (Complex& v : va_s) v += shift;
  for (Complex& v : vb_s) v += shift;
  const Separation s0 = separation(points(va), points(vb), 2.0);
  const Separation s1 = separation(points(va_s), points(vb_s), 2.0);
  CHECK(s0.delta_cheb == Approx(s1.delta_cheb).epsilon(1e-15));
  CHECK(s0.delta_eucl == Approx(s1.delta_eucl).epsilon(1e-15));
}

TEST_CASE("shifted hermitian pair: spectrum shifts, gap equals the shift") {
  GenSpec gs;
  gs.family = GenFamily::HermitianBanded;
  gs.n = 8;
  gs.seed = 17;
  const CMatrix a = generate(gs);
  const CMatrix b = shifted_copy(a, Complex(50.0, 0.0));
  const SpectrumSet sa = spectrum(a);
  const SpectrumSet sb = spectrum(b);
  REQUIRE(sa.values.size() == sb.values.size());
  for (size_t k = 0; k < sa.values.size(); ++k)
    CHECK(std::abs(sb.values[k] - sa.values[k] - Complex(50.0, 0.0)) <= 1e-10);
  // Spectra live in disjoint real intervals, so the minimum is attained at
  // the extremes: delta = 50 - (max sa - min sa) up to eigenvalue ordering.
  const double expected = 50.0 - (sa.values.back().real() - sa.values.front().real());
  const Separation sep = separation(sa, sb, operator_norm(a));
  CHECK(sep.delta_cheb == Approx(expected).epsilon(1e-10));
}

TEST_CASE("n0 follows the floor formula") {
  const SpectrumSet sa = points({Complex(0, 0)});
  const SpectrumSet sb = points({Complex(3, 0)});  // delta = 3, delta' = 1
  CHECK(separation(sa, sb, 0.0).n0 == 1);
  CHECK(separation(sa, sb, 2.0).n0 == 3);
  CHECK(separation(sa, sb, 2.5).n0 == 3);
  CHECK(separation(sa, sb, 3.0).n0 == 4);
}

TEST_CASE("normality verdict propagates into the spectrum record") {
  Eigen::MatrixXcd jordan = Eigen::MatrixXcd::Zero(3, 3);
  jordan(0, 1) = 1.0;
  jordan(1, 2) = 1.0;
  const SpectrumSet s = spectrum(CMatrix(jordan));
  CHECK_FALSE(s.is_normal);
  CHECK(s.normality_residual > 0.0);
}
