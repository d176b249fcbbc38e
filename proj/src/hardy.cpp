#include "frameforge/hardy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace frameforge::hardy {

namespace {

constexpr double kBoundarySlack = 1e-12;

void ensure_in_closed_disk(Complex z, const char* what) {
  if (std::abs(z) > 1.0 + kBoundarySlack)
    throw std::invalid_argument(std::string(what) +
                                ": evaluation point outside the closed disk");
}

}  // namespace

CoefficientSequence CoefficientSequence::zero(Eigen::Index n) {
  return {ComplexVector::Zero(n)};
}

CoefficientSequence CoefficientSequence::unit(Eigen::Index n, Eigen::Index k) {
  CoefficientSequence c{ComplexVector::Zero(n)};
  c.coeffs(k) = 1.0;
  return c;
}

HardyFunction v_map(const CoefficientSequence& c) { return {c.coeffs}; }

CoefficientSequence v_inverse(const HardyFunction& f) { return {f.coeffs}; }

MultiplyByZResult multiply_by_z(const HardyFunction& f) {
  const Eigen::Index n = f.coeffs.size();
  MultiplyByZResult out{{ComplexVector::Zero(n)}, false};
  if (n == 0) return out;
  out.value.coeffs.tail(n - 1) = f.coeffs.head(n - 1);
  out.truncation_loss = std::abs(f.coeffs(n - 1)) > kTruncationLossTol;
  return out;
}

Complex evaluate(const HardyFunction& f, Complex z) {
  ensure_in_closed_disk(z, "evaluate");
  Complex acc = 0.0;
  for (Eigen::Index i = f.coeffs.size(); i-- > 0;) acc = acc * z + f.coeffs(i);
  return acc;
}

double BlaschkeSpec::zero_condition_sum() const {
  double s = 0.0;
  for (const Complex& rho : zeros) s += 1.0 - std::abs(rho);
  return s;
}

void BlaschkeSpec::validate() const {
  if (std::abs(std::abs(unimodular) - 1.0) > 1e-12)
    throw std::invalid_argument("BlaschkeSpec: |d| must equal 1");
  if (monomial_power < 0)
    throw std::invalid_argument("BlaschkeSpec: monomial power must be >= 0");
  for (const Complex& rho : zeros) {
    const double a = std::abs(rho);
    if (a == 0.0)
      throw std::invalid_argument(
          "BlaschkeSpec: zero at the origin must be expressed through the "
          "monomial power");
    if (a >= 1.0)
      throw std::invalid_argument("BlaschkeSpec: zeros must lie inside the disk");
  }
  if (declared_tail_sum && *declared_tail_sum < 0.0)
    throw std::invalid_argument("BlaschkeSpec: declared tail sum must be >= 0");
  if (zero_condition_sum() > kZeroConditionBound)
    throw std::invalid_argument(
        "BlaschkeSpec: zero-condition sum exceeds the configured bound");
}

Complex blaschke_eval(const BlaschkeSpec& spec, Complex z) {
  spec.validate();
  ensure_in_closed_disk(z, "blaschke_eval");
  Complex acc = spec.unimodular * std::pow(z, spec.monomial_power);
  for (const Complex& rho : spec.zeros) {
    const Complex rb = std::conj(rho);
    acc *= (rb / std::abs(rho)) * (rho - z) / (1.0 - rb * z);
  }
  return acc;
}

BlaschkeSeries blaschke_to_hardy(const BlaschkeSpec& spec,
                                 Eigen::Index truncation) {
  spec.validate();
  if (truncation < 1)
    throw std::invalid_argument("blaschke_to_hardy: truncation must be >= 1");
  if (spec.declared_tail_sum && *spec.declared_tail_sum >= kTailNeglectBound)
    throw std::invalid_argument(
        "blaschke_to_hardy: declared tail sum " +
        std::to_string(*spec.declared_tail_sum) +
        " is above the neglect bound " + std::to_string(kTailNeglectBound));

  const Eigen::Index n = truncation;
  ComplexVector c = ComplexVector::Zero(n);
  if (spec.monomial_power < n) c(spec.monomial_power) = spec.unimodular;

  // Each factor expands as (conj(rho)/|rho|) * (rho - z) * sum_k (conj(rho) z)^k,
  // i.e. coefficients |rho|, then conj(rho)^k (|rho|^2 - 1)/|rho| for k >= 1.
  ComplexVector factor(n), next(n);
  for (const Complex& rho : spec.zeros) {
    const Complex rb = std::conj(rho);
    const double a = std::abs(rho);
    factor(0) = a;
    if (n > 1) {
      Complex t = rb * (a * a - 1.0) / a;
      for (Eigen::Index k = 1; k < n; ++k) {
        factor(k) = t;
        t *= rb;
      }
    }
    next.setZero();
    for (Eigen::Index k = 0; k < n; ++k) {
      if (c(k) == Complex{0.0, 0.0}) continue;
      next.tail(n - k) += c(k) * factor.head(n - k);
    }
    c.swap(next);
  }

  BlaschkeSeries out;
  out.function = HardyFunction{c};
  // The full product has unit norm, so the mass lost to the window is
  // 1 - ||c||^2 up to rounding.
  out.truncated_mass = std::max(0.0, 1.0 - c.squaredNorm());
  out.neglected_tail_sum = spec.declared_tail_sum.value_or(0.0);
  return out;
}

InnerReport is_inner(const HardyFunction& f, int samples, double tol,
                     double radius) {
  if (samples < 64)
    throw std::invalid_argument("is_inner: at least 64 boundary samples required");
  if (tol <= 0.0) throw std::invalid_argument("is_inner: tol must be > 0");
  if (radius <= 0.0 || radius > 1.0)
    throw std::invalid_argument("is_inner: radius must lie in (0, 1]");

  const Eigen::Index n = f.coeffs.size();
  const double interior_radius =
      n > 0 ? 1.0 - 1.0 / (2.0 * static_cast<double>(n)) : radius;

  auto sweep = [&](double r) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(i) / samples;
      const Complex z = std::polar(r, theta);
      worst = std::max(worst, std::abs(std::abs(evaluate(f, z)) - 1.0));
    }
    return worst;
  };

  InnerReport report;
  report.samples = samples;
  report.tolerance = tol;
  report.radius = radius;
  report.norm = f.norm();
  report.max_deviation = sweep(radius);
  report.interior_deviation =
      radius == interior_radius ? report.max_deviation : sweep(interior_radius);
  report.certified =
      report.max_deviation <= tol && report.norm <= 1.0 + tol;
  return report;
}

int model_space_dimension(const BlaschkeSpec& spec, Eigen::Index truncation) {
  spec.validate();
  if (spec.declared_tail_sum && *spec.declared_tail_sum > 0.0)
    throw std::invalid_argument(
        "model_space_dimension: finite spec required (no declared tail)");
  const int deg = spec.degree();
  const Eigen::Index required = std::max<Eigen::Index>(4 * deg, 1);
  if (truncation < required)
    throw std::invalid_argument(
        "model_space_dimension: truncation too small, need at least " +
        std::to_string(required));

  const ComplexVector c = blaschke_to_hardy(spec, truncation).function.coeffs;
  const Eigen::Index n = truncation;
  const Eigen::Index cols = n - deg;
  numerics::ComplexMatrix shifted = numerics::ComplexMatrix::Zero(n, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    shifted.col(j).tail(n - j) = c.head(n - j);

  const int rank = numerics::svd(shifted).rank();
  return static_cast<int>(n) - rank;
}

}  // namespace frameforge::hardy
