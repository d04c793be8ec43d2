#include <doctest.h>

#include <cmath>
#include <complex>

#include "sylvan/cmatrix.hpp"
#include "sylvan/generators.hpp"
#include "sylvan/json_io.hpp"

using namespace sylvan;
using doctest::Approx;

namespace {
const Complex I(0.0, 1.0);
}

TEST_CASE("construction validates shape and finiteness") {
  CHECK_NOTHROW(CMatrix::zero(1, 1));
  CHECK_NOTHROW(CMatrix::zero(3, 5, -1, 2));
  CHECK_THROWS_AS(CMatrix(Eigen::MatrixXcd(0, 0)), Error);

  Eigen::MatrixXcd bad(2, 2);
  bad.setZero();
  bad(0, 1) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(CMatrix{bad}, Error);

  const CMatrix a = CMatrix::from_entries(2, 2, {1.0, 2.0, 3.0, 4.0});
  CHECK(a(1, 0) == Complex(3.0, 0.0));
  CHECK_THROWS_AS(CMatrix::from_entries(2, 2, {1.0}), Error);
}

TEST_CASE("offsets are tracked and gate arithmetic") {
  const CMatrix a = CMatrix::zero(2, 2, 0, 0);
  const CMatrix b = CMatrix::zero(2, 2, 1, 1);
  CHECK_THROWS_AS(add(a, b), Error);
  CHECK_THROWS_AS(mul(a, b), Error);  // inner offsets 0 vs 1

  const CMatrix sym = CMatrix::zero(3, 3, -1, -1);
  CHECK(sym.is_section());
  CHECK(adjoint(sym).row_offset() == -1);

  const CMatrix rect = CMatrix::zero(2, 3, 5, -2);
  const CMatrix rect_t = transpose(rect);
  CHECK(rect_t.nrows() == 3);
  CHECK(rect_t.row_offset() == -2);
  CHECK(rect_t.col_offset() == 5);
}

TEST_CASE("normality residual: diagonal, nilpotent, circulant") {
  const CMatrix d = CMatrix::from_entries(3, 3,
                                          {1.0, 0.0, 0.0, 0.0, 2.0 * I, 0.0, 0.0, 0.0, -3.0});
  CHECK(normality_residual(d) == 0.0);
  CHECK(is_normal(d));

  // A*A - AA* = diag(-1, 1) for the single superdiagonal entry.
  const CMatrix jordan = CMatrix::from_entries(2, 2, {0.0, 1.0, 0.0, 0.0});
  CHECK(normality_residual(jordan) == Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK_FALSE(is_normal(jordan));

  GenSpec gs;
  gs.family = GenFamily::Circulant;
  gs.n = 8;
  gs.seed = 3;
  const CMatrix c = generate(gs);
  CHECK(normality_residual(c) <= 1e-13);
  CHECK(is_normal(c));

  CHECK_THROWS_AS(normality_residual(CMatrix::zero(2, 3)), Error);
}

TEST_CASE("normality residual stays small for generated Hermitian matrices") {
  GenSpec gs;
  gs.family = GenFamily::HermitianBanded;
  gs.n = 16;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    gs.seed = seed;
    const CMatrix h = generate(gs);
    const double f = h.frobenius();
    CHECK(normality_residual(h) <= 1e-12 * f * f + 1e-15);
  }
}

TEST_CASE("mat_apply semantics") {
  const CMatrix a = CMatrix::from_entries(2, 2, {1.0 + I, 2.0, 0.0, -I});
  const CMatrix id = CMatrix::identity(2);

  const CMatrix prod = mat_apply(id, a, MatOp::Mul);
  CHECK((prod.mat() - a.mat()).norm() == 0.0);

  const CMatrix back = adjoint(adjoint(a));
  CHECK((back.mat() - a.mat()).norm() == 0.0);

  const CMatrix z = mat_apply(a, a, MatOp::Sub);
  CHECK(z.frobenius() == 0.0);

  const CMatrix s = mat_apply(a, a, MatOp::Scale, Complex(2.0, 0.0));
  CHECK(s.frobenius() == Approx(2.0 * a.frobenius()));

  CHECK(adjoint(a).frobenius() == Approx(a.frobenius()));  // isometry
}

TEST_CASE("sylvester shape validation") {
  const CMatrix a = CMatrix::zero(3, 3);
  const CMatrix b = CMatrix::zero(2, 2);
  const CMatrix q = CMatrix::zero(2, 3);
  CHECK_NOTHROW(require_sylvester_shapes(a, b, q));
  CHECK_THROWS_AS(require_sylvester_shapes(a, b, CMatrix::zero(3, 2)), Error);
  CHECK_THROWS_AS(require_sylvester_shapes(CMatrix::zero(3, 2), b, q), Error);
  CHECK_THROWS_AS(require_sylvester_shapes(a, b, CMatrix::zero(2, 3, 1, 0)), Error);
}

TEST_CASE("json round-trip is exact") {
  GenSpec gs;
  gs.family = GenFamily::HermitianBanded;
  gs.n = 7;
  gs.seed = 11;
  const CMatrix a = generate(gs);
  const CMatrix back = matrix_from_json(matrix_to_json(a));
  CHECK(back.nrows() == a.nrows());
  CHECK(back.row_offset() == a.row_offset());
  CHECK((back.mat() - a.mat()).norm() == 0.0);

  const CMatrix off = CMatrix::from_entries(1, 2, {1.5 - 2.25 * I, 3.0}, -4, 7);
  const CMatrix off_back = matrix_from_json(matrix_to_json(off));
  CHECK(off_back.row_offset() == -4);
  CHECK(off_back.col_offset() == 7);
  CHECK((off_back.mat() - off.mat()).norm() == 0.0);
}

TEST_CASE("matrix json rejects malformed input") {
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"nrows":1})")), Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(
                      R"({"nrows":1,"ncols":1,"row_offset":0,"col_offset":0,"entries":[[1]]})")),
                  Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(
                      R"({"nrows":2,"ncols":1,"row_offset":0,"col_offset":0,"entries":[[1,0]]})")),
                  Error);
}
