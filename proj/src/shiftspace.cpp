#include "frameforge/shiftspace.hpp"

#include <algorithm>
#include <cmath>

namespace frameforge::shiftspace {

namespace {

constexpr double kZeroImageTol = 1e-14;

numerics::ComplexVector shift_vector(const numerics::ComplexVector& x) {
  const Eigen::Index n = x.size();
  numerics::ComplexVector y = numerics::ComplexVector::Zero(n);
  if (n > 1) y.tail(n - 1) = x.head(n - 1);
  return y;
}

InvarianceReport residual_impl(const Subspace& w,
                               const numerics::ComplexMatrix& shifted) {
  InvarianceReport report;
  if (w.trivial()) {
    report.trivial = true;
    return report;
  }
  const numerics::ComplexMatrix& basis = w.basis;
  const Eigen::Index cols = basis.cols();
  const Eigen::Index frontier_start = cols - w.frontier_columns;
  for (Eigen::Index j = 0; j < cols; ++j) {
    const numerics::ComplexVector sb = shifted.col(j);
    const double nsb = sb.norm();
    if (nsb < kZeroImageTol) {
      ++report.excluded_zero_image;
      continue;
    }
    const double res = (sb - basis * (basis.adjoint() * sb)).norm() / nsb;
    report.raw_value = std::max(report.raw_value, res);
    if (j >= frontier_start) {
      ++report.excluded_frontier;
      continue;
    }
    report.value = std::max(report.value, res);
  }
  return report;
}

}  // namespace

RightShiftResult right_shift(const hardy::CoefficientSequence& c) {
  const Eigen::Index n = c.coeffs.size();
  RightShiftResult out{hardy::CoefficientSequence::zero(n), false};
  if (n == 0) return out;
  out.value.coeffs.tail(n - 1) = c.coeffs.head(n - 1);
  out.truncation_loss =
      std::abs(c.coeffs(n - 1)) > hardy::kTruncationLossTol;
  return out;
}

numerics::ComplexMatrix shift_columns(const numerics::ComplexMatrix& basis) {
  numerics::ComplexMatrix shifted(basis.rows(), basis.cols());
  for (Eigen::Index j = 0; j < basis.cols(); ++j)
    shifted.col(j) = shift_vector(basis.col(j));
  return shifted;
}

InvarianceReport invariance_residual(const Subspace& w) {
  if (w.trivial()) {
    InvarianceReport report;
    report.trivial = true;
    return report;
  }
  return residual_impl(w, shift_columns(w.basis));
}

InvarianceReport mz_invariance_residual(const Subspace& w) {
  if (w.trivial()) {
    InvarianceReport report;
    report.trivial = true;
    return report;
  }
  numerics::ComplexMatrix shifted(w.basis.rows(), w.basis.cols());
  for (Eigen::Index j = 0; j < w.basis.cols(); ++j) {
    hardy::HardyFunction f{w.basis.col(j)};
    shifted.col(j) = multiply_by_z(f).value.coeffs;
  }
  return residual_impl(w, shifted);
}

double reducing_residual(const Subspace& w) {
  return std::max(invariance_residual(w).value,
                  invariance_residual(numerics::orthogonal_complement(w)).value);
}

Subspace shift_interior(const Subspace& w) {
  if (w.trivial()) return w;
  const Eigen::Index n = w.ambient();
  // Coordinates of the top-coefficient functional on w.
  const numerics::ComplexVector top = w.basis.row(n - 1).adjoint();
  const double tnorm = top.norm();
  if (tnorm < 1e-9) return w;  // functional numerically absent

  Eigen::JacobiSVD<numerics::ComplexMatrix> dec(top.adjoint(),
                                                Eigen::ComputeFullV);
  Subspace interior;
  interior.basis = w.basis * dec.matrixV().rightCols(w.dimension() - 1);
  return interior;
}

double relative_shift_residual(const Subspace& sub, const Subspace& within) {
  if (sub.trivial()) return 0.0;
  double worst = 0.0;
  const numerics::ComplexMatrix shifted = shift_columns(sub.basis);
  for (Eigen::Index j = 0; j < shifted.cols(); ++j) {
    const numerics::ComplexVector sb = shifted.col(j);
    const double nsb = sb.norm();
    if (nsb < kZeroImageTol) continue;
    const double res =
        (sb - within.basis * (within.basis.adjoint() * sb)).norm() / nsb;
    worst = std::max(worst, res);
  }
  return worst;
}

CyclicSpanResult cyclic_span(const hardy::CoefficientSequence& c,
                             Eigen::Index depth) {
  const Eigen::Index n = c.coeffs.size();
  if (c.norm() == 0.0)
    throw std::invalid_argument("cyclic_span: zero generating vector");
  if (depth < 1 || depth > n)
    throw std::invalid_argument("cyclic_span: depth must lie in [1, truncation]");

  numerics::ComplexMatrix iterates(n, depth);
  numerics::ComplexVector x = c.coeffs;
  for (Eigen::Index k = 0; k < depth; ++k) {
    iterates.col(k) = x;
    x = shift_vector(x);
  }

  numerics::OrthonormalizeResult onb = numerics::orthonormalize(iterates);
  CyclicSpanResult out;
  out.space = onb.space;
  out.space.frontier_columns = out.space.dimension() > 0 ? 1 : 0;
  std::size_t next_kept = 0;
  for (Eigen::Index k = 0; k < depth; ++k) {
    if (next_kept < onb.kept.size() && onb.kept[next_kept] == k)
      ++next_kept;
    else
      out.dropped.push_back(static_cast<int>(k));
  }
  return out;
}

BeurlingExtraction beurling_extract(const Subspace& w, double invariance_gate,
                                    double wandering_split) {
  if (w.trivial())
    throw std::invalid_argument("beurling_extract: trivial subspace");

  BeurlingExtraction out;
  const InvarianceReport inv = invariance_residual(w);
  out.raw_residual = inv.raw_value;
  // Two witnesses of section-level shift invariance: the frontier-aware
  // column residual, and the residual of the truncation interior. Either one
  // certifies; genuinely non-invariant inputs fail both.
  out.gate_residual =
      std::min(inv.value, relative_shift_residual(shift_interior(w), w));
  if (out.gate_residual > invariance_gate)
    throw std::invalid_argument(
        "beurling_extract: input is not numerically shift-invariant "
        "(residual " +
        std::to_string(out.gate_residual) + " exceeds gate " +
        std::to_string(invariance_gate) + ")");

  const numerics::ComplexMatrix& basis = w.basis;
  const Subspace shifted_span =
      numerics::orthonormalize(shift_columns(basis)).space;
  numerics::ComplexMatrix defect = basis;
  if (!shifted_span.trivial())
    defect -= shifted_span.basis * (shifted_span.basis.adjoint() * basis);

  Eigen::JacobiSVD<numerics::ComplexMatrix> dec(
      defect, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = dec.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(sv.size(), 6); ++i)
    out.wandering_sigmas.push_back(sv(i));

  int dim = 0;
  if (top > 1e-12)
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > wandering_split * top) ++dim;
  out.wandering_dimension = dim;
  if (dim != 1) throw WanderingDimensionError(dim);

  // The defect's top right-singular direction, mapped through the basis,
  // is the farthest-from-S(w) unit vector of w.
  numerics::ComplexVector gen = basis * dec.matrixV().col(0);
  gen /= gen.norm();
  for (Eigen::Index i = 0; i < gen.size(); ++i) {
    const double mag = std::abs(gen(i));
    if (mag > 1e-10) {
      gen *= std::conj(gen(i)) / mag;
      break;
    }
  }
  out.generator = hardy::CoefficientSequence{gen};

  const CyclicSpanResult regen =
      cyclic_span(out.generator, std::min<Eigen::Index>(w.dimension(), w.ambient()));
  out.span_distance = numerics::principal_angle_distance(w, regen.space);
  return out;
}

}  // namespace frameforge::shiftspace
