#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "frameforge/numerics.hpp"
#include "frameforge/prng.hpp"
#include "support.hpp"

using namespace frameforge;
using namespace frameforge::numerics;
using test_support::unit;

namespace {

double reconstruction_residual(const ComplexMatrix& m, const SvdResult& dec) {
  ComplexMatrix rebuilt = dec.left_basis *
                          dec.singular_values.asDiagonal().toDenseMatrix() *
                          dec.right_basis.adjoint();
  return (m - rebuilt).norm();
}

double orthonormality_defect(const ComplexMatrix& q) {
  if (q.cols() == 0) return 0.0;
  return (q.adjoint() * q -
          ComplexMatrix::Identity(q.cols(), q.cols()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace

TEST_CASE("svd of the identity has unit singular values") {
  SvdResult dec = svd(ComplexMatrix::Identity(3, 3));
  REQUIRE(dec.singular_values.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(dec.singular_values(i) == doctest::Approx(1.0));
}

TEST_CASE("svd of a diagonal matrix returns the diagonal, descending") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 2.0;
  m(1, 1) = 1.0;
  SvdResult dec = svd(m);
  CHECK(dec.singular_values(0) == doctest::Approx(2.0));
  CHECK(dec.singular_values(1) == doctest::Approx(1.0));
}

TEST_CASE("svd reconstructs random matrices to the contract bound") {
  SplitMix64 rng(41);
  ComplexMatrix m = random_matrix(rng, 8, 5);
  SvdResult dec = svd(m);
  CHECK(reconstruction_residual(m, dec) <= 1e-10 * std::max(1.0, m.norm()));
  CHECK(orthonormality_defect(dec.left_basis) <= 1e-10);
  CHECK(orthonormality_defect(dec.right_basis) <= 1e-10);
}

TEST_CASE("svd reconstruction property across shapes") {
  SplitMix64 rng(7);
  const int shapes[][2] = {{1, 1}, {3, 7}, {7, 3}, {20, 20}, {40, 17}, {17, 40}};
  for (auto [r, c] : shapes) {
    ComplexMatrix m = random_matrix(rng, r, c);
    SvdResult dec = svd(m);
    CHECK(reconstruction_residual(m, dec) <= 1e-10 * std::max(1.0, m.norm()));
    for (Eigen::Index i = 0; i + 1 < dec.singular_values.size(); ++i)
      CHECK(dec.singular_values(i) >= dec.singular_values(i + 1));
  }
}

TEST_CASE("svd rejects empty and non-finite input") {
  CHECK_THROWS_AS(svd(ComplexMatrix(0, 3)), std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(svd(bad), std::invalid_argument);
}

TEST_CASE("svd of the zero matrix has all-zero singular values") {
  SvdResult dec = svd(ComplexMatrix::Zero(4, 3));
  CHECK(dec.singular_values.maxCoeff() == 0.0);
  CHECK(dec.rank() == 0);
}

TEST_CASE("null space of a repeated-column synthesis is the planted line") {
  ComplexMatrix m(2, 3);
  m.col(0) = unit(2, 0);
  m.col(1) = unit(2, 0);
  m.col(2) = unit(2, 1);
  Subspace ker = null_space(m);
  REQUIRE(ker.dimension() == 1);
  ComplexVector expected(3);
  expected << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
  CHECK(std::abs(expected.dot(ker.basis.col(0))) == doctest::Approx(1.0));
  CHECK((m * ker.basis).norm() <= 1e-12);
}

TEST_CASE("null space of a unitary matrix is trivial") {
  SplitMix64 rng(11);
  ComplexMatrix m = random_matrix(rng, 6, 6);
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(6, 6);
  CHECK(null_space(q).dimension() == 0);
}

TEST_CASE("null space dimension of an orbit synthesis matches the rank oracle") {
  const auto eigs = test_support::two_adic_schedule(8);
  ComplexVector seed(8);
  for (int i = 0; i < 8; ++i) seed(i) = std::sqrt(1.0 - std::norm(eigs[i]));
  ComplexMatrix u = test_support::orbit_synthesis_oracle(eigs, seed, 64);
  CHECK(test_support::qr_rank_oracle(u) == 8);
  Subspace ker = null_space(u);
  CHECK(ker.dimension() == 64 - 8);
  CHECK(orthonormality_defect(ker.basis) <= 1e-10);
  for (Eigen::Index j = 0; j < ker.dimension(); ++j)
    CHECK((u * ker.basis.col(j)).norm() <= 1e-9 * u.norm());
}

TEST_CASE("null space of the zero matrix is the full ambient space") {
  Subspace ker = null_space(ComplexMatrix::Zero(3, 5));
  CHECK(ker.dimension() == 5);
}

TEST_CASE("least squares against the identity returns the right-hand side") {
  SplitMix64 rng(3);
  ComplexMatrix b = random_matrix(rng, 4, 2);
  CHECK((least_squares(ComplexMatrix::Identity(4, 4), b) - b).norm() <= 1e-13);
}

TEST_CASE("least squares with orthonormal columns collapses to the adjoint") {
  SplitMix64 rng(5);
  ComplexMatrix m = random_matrix(rng, 10, 3);
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(10, 3);
  ComplexMatrix b = random_matrix(rng, 10, 2);
  CHECK((least_squares(q, b) - q.adjoint() * b).norm() <= 1e-12);
}

TEST_CASE("least squares recovers a planted solution of a consistent system") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix a = random_matrix(rng, 10, 3);
    ComplexMatrix x0 = random_matrix(rng, 3, 2);
    ComplexMatrix b = a * x0;
    ComplexMatrix x = least_squares(a, b);
    CHECK((x - x0).norm() <= 1e-8 * std::max(1.0, x0.norm()));
    CHECK((a * x - b).norm() <= 1e-10 * std::max(1.0, b.norm()));
  }
}

TEST_CASE("least squares rejects mismatched row counts") {
  CHECK_THROWS_AS(
      least_squares(ComplexMatrix::Identity(3, 3), ComplexMatrix::Identity(4, 4)),
      std::invalid_argument);
}

TEST_CASE("principal angle distance of a subspace to itself is zero") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    ComplexMatrix span = random_matrix(rng, 12, 4);
    Subspace p = orthonormalize(span).space;
    CHECK(principal_angle_distance(p, p) <= 1e-12);
  }
}

TEST_CASE("principal angle distance of orthogonal lines is one") {
  Subspace p = Subspace::line(unit(4, 0));
  Subspace q = Subspace::line(unit(4, 1));
  CHECK(principal_angle_distance(p, q) == doctest::Approx(1.0));
}

TEST_CASE("principal angle distance matches the closed-form diagonal line") {
  Subspace p = Subspace::line(unit(2, 0));
  ComplexVector diag(2);
  diag << 1.0, 1.0;
  Subspace q = Subspace::line(diag);
  CHECK(principal_angle_distance(p, q) ==
        doctest::Approx(std::sin(M_PI / 4)).epsilon(1e-12));
}

TEST_CASE("principal angle distance detects strict containment") {
  ComplexMatrix span(4, 2);
  span.col(0) = unit(4, 0);
  span.col(1) = unit(4, 1);
  Subspace q{span};
  Subspace p = Subspace::line(unit(4, 0));
  CHECK(principal_angle_distance(p, q) == doctest::Approx(1.0));
  CHECK_THROWS_AS(principal_angle_distance(p, Subspace::line(unit(5, 0))),
                  std::invalid_argument);
}

TEST_CASE("orthonormalize drops dependent columns in order") {
  ComplexMatrix cols(3, 3);
  cols.col(0) = unit(3, 0);
  cols.col(1) = unit(3, 0);
  cols.col(2) = unit(3, 1);
  OrthonormalizeResult r = orthonormalize(cols);
  REQUIRE(r.space.dimension() == 2);
  CHECK(r.kept == std::vector<int>{0, 2});
  CHECK(orthonormality_defect(r.space.basis) <= 1e-14);
}

TEST_CASE("orthogonal complement splits the ambient space") {
  SplitMix64 rng(23);
  Subspace p = orthonormalize(random_matrix(rng, 9, 3)).space;
  Subspace c = orthogonal_complement(p);
  CHECK(c.dimension() == 6);
  CHECK((p.basis.adjoint() * c.basis).norm() <= 1e-12);
  CHECK(orthogonal_complement(Subspace::trivial_space(5)).dimension() == 5);
  CHECK(orthogonal_complement(Subspace::full_space(5)).dimension() == 0);
}
