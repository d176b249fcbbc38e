#pragma once

#include <optional>
#include <vector>

#include "frameforge/numerics.hpp"

namespace frameforge::hardy {

using numerics::Complex;
using numerics::ComplexVector;

/// Truncated element of the one-sided square-summable sequence space:
/// coefficients (c_0, ..., c_{N-1}) at truncation length N.
struct CoefficientSequence {
  ComplexVector coeffs;

  Eigen::Index truncation() const { return coeffs.size(); }
  double norm() const { return coeffs.norm(); }

  static CoefficientSequence zero(Eigen::Index n);
  static CoefficientSequence unit(Eigen::Index n, Eigen::Index k);  // e_k
};

/// Power-series coefficients of a function analytic on the unit disk.
/// Storage is identical to CoefficientSequence; the two types keep the
/// sequence-side and disk-side roles of the same data distinct.
struct HardyFunction {
  ComplexVector coeffs;

  Eigen::Index truncation() const { return coeffs.size(); }
  double norm() const { return coeffs.norm(); }
};

/// The sequence-to-disk unitary: coefficient-identical reinterpretation.
HardyFunction v_map(const CoefficientSequence& c);
CoefficientSequence v_inverse(const HardyFunction& f);

/// Modulus threshold above which a dropped top coefficient counts as
/// truncation loss.
inline constexpr double kTruncationLossTol = 1e-12;

struct MultiplyByZResult {
  HardyFunction value;
  bool truncation_loss;  // |dropped top coefficient| > kTruncationLossTol
};

/// Multiplication by z in the truncation window: coefficients shift up one
/// slot, the top coefficient is dropped (and flagged when non-negligible).
MultiplyByZResult multiply_by_z(const HardyFunction& f);

/// Horner evaluation of the stored series at |z| <= 1.
Complex evaluate(const HardyFunction& f, Complex z);

/// Symbolic Blaschke product: d * z^r * prod_j (conj(rho_j)/|rho_j|) *
/// (rho_j - z) / (1 - conj(rho_j) z), with |d| = 1, zeros rho_j inside the
/// punctured disk. A zero at the origin is expressed only through r.
/// For a section of an infinite product, declared_tail_sum records the
/// remaining sum of (1 - |rho_j|) over the neglected factors.
struct BlaschkeSpec {
  Complex unimodular{1.0, 0.0};
  int monomial_power = 0;
  std::vector<Complex> zeros;
  std::optional<double> declared_tail_sum;

  int degree() const { return monomial_power + static_cast<int>(zeros.size()); }
  double zero_condition_sum() const;  // sum of (1 - |rho_j|) over listed zeros
  void validate() const;
};

/// Neglecting a declared tail is accepted only below this bound on the
/// remaining zero-condition sum.
inline constexpr double kTailNeglectBound = 1e-6;

/// Listed zero-condition sums beyond this bound are rejected as violating
/// the convergence condition margin.
inline constexpr double kZeroConditionBound = 4096.0;

Complex blaschke_eval(const BlaschkeSpec& spec, Complex z);

struct BlaschkeSeries {
  HardyFunction function;
  double truncated_mass;      // squared-norm mass of the product beyond the window
  double neglected_tail_sum;  // declared tail sum that was neglected
};

/// Power-series coefficients of the product up to degree N-1, by sequential
/// polynomial multiplication of the expanded factors.
BlaschkeSeries blaschke_to_hardy(const BlaschkeSpec& spec, Eigen::Index truncation);

struct InnerReport {
  bool certified = false;
  double max_deviation = 0.0;       // max | |f| - 1 | over the sweep at `radius`
  double interior_deviation = 0.0;  // same sweep at radius 1 - 1/(2N), diagnostic
  double norm = 0.0;
  double radius = 1.0;
  int samples = 0;
  double tolerance = 0.0;
};

/// Sampled certification that the stored series has unimodular boundary
/// values: sweeps `samples` equispaced angles at the given radius (default:
/// the unit circle itself, where a truncated series is exactly evaluable)
/// and requires max | |f| - 1 | <= tol together with ||f|| <= 1 + tol.
/// An uncertified result is a valid negative outcome, not an error.
InnerReport is_inner(const HardyFunction& f, int samples, double tol,
                     double radius = 1.0);

/// Dimension of the orthogonal complement of span{z^n * phi : 0 <= n <
/// N - deg} inside the truncated space, computed through the numerical rank
/// of the shifted-coefficient family. Equals monomial_power + #zeros for
/// any finite spec with adequate truncation.
int model_space_dimension(const BlaschkeSpec& spec, Eigen::Index truncation);

}  // namespace frameforge::hardy
