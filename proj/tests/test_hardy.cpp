#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "frameforge/hardy.hpp"
#include "frameforge/prng.hpp"
#include "frameforge/shiftspace.hpp"
#include "support.hpp"

using namespace frameforge;
using namespace frameforge::hardy;
using test_support::canonical_zeros;

namespace {

CoefficientSequence geometric_halves(Eigen::Index n) {
  CoefficientSequence c = CoefficientSequence::zero(n);
  double v = 1.0;
  for (Eigen::Index i = 0; i < n; ++i, v *= 0.5) c.coeffs(i) = v;
  return c;
}

}  // namespace

TEST_CASE("v_map sends the first unit sequence to the constant function") {
  HardyFunction f = v_map(CoefficientSequence::unit(16, 0));
  CHECK(evaluate(f, {0.3, 0.2}) == Complex{1.0, 0.0});
}

TEST_CASE("v_map sends e_1 to the coordinate function") {
  HardyFunction f = v_map(CoefficientSequence::unit(16, 1));
  CHECK(evaluate(f, {0.5, 0.0}) == Complex{0.5, 0.0});
}

TEST_CASE("v_map preserves the norm exactly") {
  CoefficientSequence c = geometric_halves(64);
  HardyFunction f = v_map(c);
  CHECK(f.norm() == c.norm());
  // Geometric oracle: sum of 4^-n.
  double oracle = 0.0;
  for (int n = 63; n >= 0; --n) oracle += std::pow(0.25, n);
  CHECK(f.norm() * f.norm() == doctest::Approx(oracle).epsilon(1e-14));
  CHECK(f.norm() * f.norm() == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("v_inverse inverts v_map bitwise") {
  SplitMix64 rng(29);
  CoefficientSequence c{random_vector(rng, 64)};
  CoefficientSequence back = v_inverse(v_map(c));
  REQUIRE(back.coeffs.size() == 64);
  for (Eigen::Index i = 0; i < 64; ++i) CHECK(back.coeffs(i) == c.coeffs(i));
  CHECK(v_inverse(HardyFunction{CoefficientSequence::unit(8, 0).coeffs}).coeffs ==
        CoefficientSequence::unit(8, 0).coeffs);
}

TEST_CASE("multiply_by_z shifts coefficients and flags dropped mass") {
  HardyFunction one{CoefficientSequence::unit(8, 0).coeffs};
  MultiplyByZResult r = multiply_by_z(one);
  CHECK(r.value.coeffs(1) == Complex{1.0, 0.0});
  CHECK_FALSE(r.truncation_loss);

  HardyFunction top{CoefficientSequence::unit(8, 7).coeffs};
  MultiplyByZResult edge = multiply_by_z(top);
  CHECK(edge.value.norm() == 0.0);
  CHECK(edge.truncation_loss);

  HardyFunction small{Eigen::Vector3cd{1.0, 2.0, 3.0}};
  MultiplyByZResult s = multiply_by_z(small);
  CHECK(s.value.coeffs(0) == Complex{0.0, 0.0});
  CHECK(s.value.coeffs(1) == Complex{1.0, 0.0});
  CHECK(s.value.coeffs(2) == Complex{2.0, 0.0});
  CHECK(s.truncation_loss);
}

TEST_CASE("intertwining: shifting commutes with the coefficient unitary") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    CoefficientSequence c{random_vector(rng, 256)};
    HardyFunction lhs = v_map(shiftspace::right_shift(c).value);
    HardyFunction rhs = multiply_by_z(v_map(c)).value;
    REQUIRE(lhs.coeffs.size() == rhs.coeffs.size());
    for (Eigen::Index i = 0; i < lhs.coeffs.size(); ++i)
      CHECK(lhs.coeffs(i) == rhs.coeffs(i));
  }
}

TEST_CASE("evaluate uses the truncated series") {
  HardyFunction z2{CoefficientSequence::unit(8, 2).coeffs};
  CHECK(evaluate(z2, {0.5, 0.0}) == Complex{0.25, 0.0});

  HardyFunction geo = v_map(geometric_halves(64));
  CHECK(std::abs(evaluate(geo, {0.5, 0.0}) - 4.0 / 3.0) <= 1e-12);

  CHECK_THROWS_AS(evaluate(z2, {1.2, 0.0}), std::invalid_argument);
}

TEST_CASE("blaschke_eval places the zero and the constant term") {
  BlaschkeSpec spec;
  spec.zeros = {{0.5, 0.0}};
  CHECK(std::abs(blaschke_eval(spec, 0.0) - 0.5) <= 1e-15);
  CHECK(std::abs(blaschke_eval(spec, {0.5, 0.0})) <= 1e-15);
  CHECK(std::abs(blaschke_eval(spec, {1.0, 0.0}) - Complex{-1.0, 0.0}) <= 1e-15);
}

TEST_CASE("blaschke_eval is unimodular on the boundary") {
  BlaschkeSpec spec;
  spec.zeros = {{0.5, 0.0}, {0.0, -0.3}};
  double worst = 0.0;
  for (int i = 0; i < 1024; ++i) {
    const Complex z = std::polar(1.0, 2.0 * M_PI * i / 1024.0);
    worst = std::max(worst, std::abs(std::abs(blaschke_eval(spec, z)) - 1.0));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("blaschke spec validation") {
  BlaschkeSpec bad_const;
  bad_const.unimodular = {0.5, 0.0};
  CHECK_THROWS_AS(bad_const.validate(), std::invalid_argument);

  BlaschkeSpec origin_zero;
  origin_zero.zeros = {{0.0, 0.0}};
  CHECK_THROWS_AS(origin_zero.validate(), std::invalid_argument);

  BlaschkeSpec outside;
  outside.zeros = {{1.0, 0.5}};
  CHECK_THROWS_AS(outside.validate(), std::invalid_argument);
}

TEST_CASE("blaschke_to_hardy expands a pure monomial") {
  BlaschkeSpec spec;
  spec.monomial_power = 3;
  BlaschkeSeries series = blaschke_to_hardy(spec, 16);
  CHECK((series.function.coeffs - CoefficientSequence::unit(16, 3).coeffs).norm() ==
        0.0);
  CHECK(series.truncated_mass <= 1e-15);
}

TEST_CASE("blaschke_to_hardy matches the hand-expanded single factor") {
  BlaschkeSpec spec;
  spec.zeros = {{0.5, 0.0}};
  BlaschkeSeries series = blaschke_to_hardy(spec, 64);
  // (0.5 - z)/(1 - 0.5 z) = (0.5 - z) * sum (0.5 z)^k: 0.5, -0.75, -0.375, ...
  CHECK(std::abs(series.function.coeffs(0) - 0.5) <= 1e-15);
  CHECK(std::abs(series.function.coeffs(1) + 0.75) <= 1e-15);
  CHECK(std::abs(series.function.coeffs(2) + 0.375) <= 1e-15);
  for (int k = 2; k < 10; ++k)
    CHECK(std::abs(series.function.coeffs(k + 1) / series.function.coeffs(k) - 0.5) <=
          1e-12);
  // Series route agrees with direct evaluation inside the disk.
  for (double x : {0.0, 0.3, -0.7}) {
    CHECK(std::abs(evaluate(series.function, {x, 0.1}) -
                   blaschke_eval(spec, {x, 0.1})) <= 1e-12);
  }
}

TEST_CASE("blaschke_to_hardy then is_inner certifies the product") {
  BlaschkeSpec spec;
  spec.zeros = canonical_zeros(3);
  BlaschkeSeries series = blaschke_to_hardy(spec, 256);
  InnerReport rep = is_inner(series.function, 1024, 1e-6);
  CHECK(rep.certified);
  CHECK(rep.max_deviation <= 1e-8);
}

TEST_CASE("blaschke_to_hardy rejects a non-neglectable declared tail") {
  BlaschkeSpec spec;
  spec.zeros = {{0.5, 0.0}};
  spec.declared_tail_sum = 1e-3;
  CHECK_THROWS_AS(blaschke_to_hardy(spec, 64), std::invalid_argument);
  spec.declared_tail_sum = 1e-9;
  BlaschkeSeries series = blaschke_to_hardy(spec, 64);
  CHECK(series.neglected_tail_sum == 1e-9);
}

TEST_CASE("blaschke series norms stay contractive across random specs") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    BlaschkeSpec spec;
    const int degree = 1 + static_cast<int>(rng.next() % 8);
    for (int j = 0; j < degree; ++j) {
      const double radius = 0.05 + 0.85 * rng.uniform();
      const double angle = 2.0 * M_PI * rng.uniform();
      spec.zeros.push_back(std::polar(radius, angle));
    }
    BlaschkeSeries series = blaschke_to_hardy(spec, 256);
    CHECK(series.function.norm() <= 1.0 + 1e-8);
  }
}

TEST_CASE("is_inner certifies the coordinate function and rejects constants") {
  HardyFunction z{CoefficientSequence::unit(256, 1).coeffs};
  InnerReport rep = is_inner(z, 128, 1e-6);
  CHECK(rep.certified);
  CHECK(rep.max_deviation <= 1e-14);
  CHECK(rep.interior_deviation == doctest::Approx(1.0 / 512.0).epsilon(1e-9));

  HardyFunction half{0.5 * CoefficientSequence::unit(256, 0).coeffs};
  InnerReport neg = is_inner(half, 128, 1e-6);
  CHECK_FALSE(neg.certified);
  CHECK(neg.max_deviation == doctest::Approx(0.5));
}

TEST_CASE("is_inner certifies a degree-5 product at the acceptance scale") {
  BlaschkeSpec spec;
  spec.zeros = canonical_zeros(5);
  BlaschkeSeries series = blaschke_to_hardy(spec, 512);
  InnerReport rep = is_inner(series.function, 1024, 1e-6);
  CHECK(rep.certified);
}

TEST_CASE("is_inner validates its sampling parameters") {
  HardyFunction z{CoefficientSequence::unit(64, 1).coeffs};
  CHECK_THROWS_AS(is_inner(z, 32, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(is_inner(z, 128, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(is_inner(z, 128, 1e-6, 1.5), std::invalid_argument);
}

TEST_CASE("model space dimension of a monomial") {
  BlaschkeSpec spec;
  spec.monomial_power = 3;
  CHECK(model_space_dimension(spec, 256) == 3);
}

TEST_CASE("model space dimension of a single factor is one") {
  BlaschkeSpec spec;
  spec.zeros = {{0.5, 0.0}};
  CHECK(model_space_dimension(spec, 256) == 1);
}

TEST_CASE("model space dimension matches the rank oracle for three zeros") {
  BlaschkeSpec spec;
  spec.zeros = {{0.5, 0.0}, {0.0, -0.3}, {0.2, 0.2}};
  const int n = 256;
  CHECK(model_space_dimension(spec, n) == 3);

  // Independent QR-rank route on the shifted-coefficient family.
  const Eigen::VectorXcd c = blaschke_to_hardy(spec, n).function.coeffs;
  Eigen::MatrixXcd family = Eigen::MatrixXcd::Zero(n, n - 3);
  for (Eigen::Index j = 0; j < n - 3; ++j)
    family.col(j).tail(n - j) = c.head(n - j);
  CHECK(test_support::qr_rank_oracle(family) == n - 3);
}

TEST_CASE("model space dimension adds the monomial power") {
  BlaschkeSpec spec;
  spec.zeros = {{0.5, 0.0}, {0.0, -0.3}};
  spec.monomial_power = 1;
  CHECK(model_space_dimension(spec, 256) == 3);
}

TEST_CASE("model space rejects truncations below the stated minimum") {
  BlaschkeSpec spec;
  spec.zeros = canonical_zeros(5);
  try {
    model_space_dimension(spec, 16);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("20") != std::string::npos);
  }
}

TEST_CASE("model space dimension across random specs equals the degree") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    BlaschkeSpec spec;
    const int k = static_cast<int>(rng.next() % 4);
    spec.monomial_power = static_cast<int>(rng.next() % 3);
    if (k + spec.monomial_power == 0) spec.monomial_power = 1;
    for (int j = 0; j < k; ++j)
      spec.zeros.push_back(std::polar(0.1 + 0.7 * rng.uniform(),
                                      2.0 * M_PI * rng.uniform()));
    CHECK(model_space_dimension(spec, 128) == spec.degree());
  }
}
