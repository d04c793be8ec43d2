#include <doctest.h>

#include <cmath>
#include <set>

#include "sylvan/generators.hpp"
#include "sylvan/spectra.hpp"

using namespace sylvan;
using doctest::Approx;

TEST_CASE("splitmix64 reference stream") {
  // Known stream for state 0: the standard finalizer constants.
  std::uint64_t state = 0;
  const std::uint64_t first = splitmix64(state);
  CHECK(first == 0xE220A8397B1DCDAFULL);
  const std::uint64_t second = splitmix64(state);
  CHECK(second == 0x6E789E6AA1B965F4ULL);
  CHECK(state != 0);
}

TEST_CASE("uniform source stays in [-1, 1] and is seed-deterministic") {
  UniformSource a(12345), b(12345), c(54321);
  bool all_equal = true, any_diff = false;
  for (int k = 0; k < 1000; ++k) {
    const double va = a.next();
    const double vb = b.next();
    const double vc = c.next();
    CHECK(va >= -1.0);
    CHECK(va < 1.0 + 1e-16);
    all_equal = all_equal && (va == vb);
    any_diff = any_diff || (va != vc);
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("generate is bit-reproducible") {
  GenSpec spec;
  spec.family = GenFamily::HermitianBanded;
  spec.n = 12;
  spec.seed = 99;
  const CMatrix m1 = generate(spec);
  const CMatrix m2 = generate(spec);
  CHECK(m1.mat().cwiseEqual(m2.mat()).all());
  spec.seed = 100;
  const CMatrix m3 = generate(spec);
  CHECK_FALSE(m1.mat().cwiseEqual(m3.mat()).all());
}

TEST_CASE("diagonal family is diagonal and normal") {
  GenSpec spec;
  spec.family = GenFamily::Diagonal;
  spec.n = 6;
  spec.seed = 1;
  spec.spread = 2.0;
  const CMatrix m = generate(spec);
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 6; ++j) {
      if (i != j) CHECK(m(i, j) == Complex(0, 0));
      else {
        CHECK(std::abs(m(i, i).real()) <= 2.0);
        CHECK(std::abs(m(i, i).imag()) <= 2.0);
      }
    }
  CHECK(is_normal(m));
}

TEST_CASE("hermitian banded family: structure, hermiticity, decay") {
  GenSpec spec;
  spec.family = GenFamily::HermitianBanded;
  spec.n = 16;
  spec.seed = 7;
  spec.band = 3;
  spec.decay_alpha = 2.0;
  const CMatrix m = generate(spec);
  CHECK(m.square());
  for (Index i = 0; i < 16; ++i) {
    CHECK(m(i, i).imag() == 0.0);  // real diagonal, exactly
    for (Index j = 0; j < 16; ++j) {
      CHECK(m(i, j) == std::conj(m(j, i)));  // exact mirror by construction
      if (std::abs(i - j) > 3) CHECK(m(i, j) == Complex(0, 0));
      // Damped drawing keeps |entry| <= (1 + |i-j|)^(-alpha-1).
      if (i != j && std::abs(i - j) <= 3) {
        const double cap = std::pow(1.0 + std::abs(static_cast<double>(i - j)), -3.0);
        CHECK(std::abs(m(i, j).real()) <= cap * (1 + 1e-15));
        CHECK(std::abs(m(i, j).imag()) <= cap * (1 + 1e-15));
      }
    }
  }
  CHECK(normality_residual(m) == 0.0);
  const SpectrumSet s = spectrum(m);
  for (const Complex& v : s.values) CHECK(v.imag() == 0.0);
}

TEST_CASE("circulant family: cyclic rows and symbol eigenvalues") {
  GenSpec spec;
  spec.family = GenFamily::Circulant;
  spec.n = 8;
  spec.seed = 5;
  const CMatrix m = generate(spec);
  // Row i is the first row rotated right by i: C(i, j) = c_{(j - i) mod n}.
  for (Index i = 0; i < 8; ++i)
    for (Index j = 0; j < 8; ++j) CHECK(m(i, j) == m(0, (j - i + 8) % 8));
  CHECK(is_normal(m));

  // Eigenvalues are the symbol at the n-th roots of unity.
  const double pi = std::acos(-1.0);
  std::vector<Complex> expected;
  for (Index t = 0; t < 8; ++t) {
    Complex val(0, 0);
    for (Index j = 0; j < 8; ++j)
      val += m(0, j) * std::exp(Complex(0, 2.0 * pi * static_cast<double>(j * t) / 8.0));
    expected.push_back(val);
  }
  const SpectrumSet s = spectrum(m);
  // Compare as multisets under lexicographic sort.
  std::sort(expected.begin(), expected.end(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  REQUIRE(s.values.size() == expected.size());
  for (size_t k = 0; k < expected.size(); ++k) CHECK(std::abs(s.values[k] - expected[k]) <= 1e-10);
}

TEST_CASE("shifted copy adds a scalar to the diagonal only") {
  GenSpec base;
  base.family = GenFamily::Circulant;
  base.n = 5;
  base.seed = 3;
  const CMatrix m = generate(base);
  const Complex shift(2.5, -1.0);
  const CMatrix shifted = shifted_copy(m, shift);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j) {
      if (i == j) CHECK(std::abs(shifted(i, j) - m(i, j) - shift) <= 1e-15);
      else CHECK(shifted(i, j) == m(i, j));
    }

  GenSpec via_spec;
  via_spec.family = GenFamily::ShiftedCopy;
  via_spec.base = GenFamily::Circulant;
  via_spec.n = 5;
  via_spec.seed = 3;
  via_spec.shift = shift;
  const CMatrix m2 = generate(via_spec);
  CHECK(m2.mat().cwiseEqual(shifted.mat()).all());
}

TEST_CASE("random_dense is reproducible and respects spread") {
  const CMatrix a = random_dense(4, 6, 77, 3.0);
  const CMatrix b = random_dense(4, 6, 77, 3.0);
  CHECK(a.mat().cwiseEqual(b.mat()).all());
  CHECK(a.nrows() == 4);
  CHECK(a.ncols() == 6);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 6; ++j) {
      CHECK(std::abs(a(i, j).real()) <= 3.0);
      CHECK(std::abs(a(i, j).imag()) <= 3.0);
    }
  const CMatrix c = random_dense(4, 6, 78, 3.0);
  CHECK_FALSE(a.mat().cwiseEqual(c.mat()).all());
}

TEST_CASE("invalid specs are rejected") {
  GenSpec spec;
  spec.n = 0;
  CHECK_THROWS_AS(generate(spec), Error);
  spec.n = 4;
  spec.spread = 0.0;
  CHECK_THROWS_AS(generate(spec), Error);
  spec.spread = 1.0;
  spec.decay_alpha = -1.0;
  CHECK_THROWS_AS(generate(spec), Error);
  spec.decay_alpha = 1.0;
  spec.band = -1;
  CHECK_THROWS_AS(generate(spec), Error);
  spec.band = 2;
  spec.family = GenFamily::ShiftedCopy;
  spec.base = GenFamily::ShiftedCopy;  // no stacking
  CHECK_THROWS_AS(generate(spec), Error);
}

TEST_CASE("every family yields a normal matrix") {
  for (GenFamily family : {GenFamily::Diagonal, GenFamily::HermitianBanded, GenFamily::Circulant}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      GenSpec spec;
      spec.family = family;
      spec.n = 9;
      spec.seed = seed;
      CHECK(is_normal(generate(spec)));
    }
  }
}
