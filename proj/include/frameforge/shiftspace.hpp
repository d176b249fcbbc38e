#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "frameforge/hardy.hpp"
#include "frameforge/numerics.hpp"

namespace frameforge::shiftspace {

using numerics::Subspace;

struct RightShiftResult {
  hardy::CoefficientSequence value;
  bool truncation_loss;
};

/// Right shift in the truncation window: prepend zero, drop (and flag) the
/// top coefficient.
RightShiftResult right_shift(const hardy::CoefficientSequence& c);

/// Image of the right shift applied to every basis column.
numerics::ComplexMatrix shift_columns(const numerics::ComplexMatrix& basis);

struct InvarianceReport {
  double value = 0.0;      // with exclusions below
  double raw_value = 0.0;  // only zero-image columns excluded
  int excluded_zero_image = 0;  // columns with ||S b|| < 1e-14
  int excluded_frontier = 0;    // trailing Krylov frontier columns
  bool trivial = false;         // trivial subspace: residual defined as 0
};

/// max over basis columns b of ||(I - P_w) S b|| / ||S b||; 0 means
/// numerically shift-invariant. Columns annihilated by the shift (pure
/// top-coefficient vectors) and marked Krylov frontier columns are excluded
/// and reported.
InvarianceReport invariance_residual(const Subspace& w);

/// Same computation carried out on the disk side of the coefficient
/// unitary, with multiplication by z as the shift.
InvarianceReport mz_invariance_residual(const Subspace& w);

/// max of the invariance residuals of w and of its orthogonal complement.
double reducing_residual(const Subspace& w);

/// {x in w : x_{N-1} = 0} — the part of w whose shift images the truncation
/// window represents faithfully. Returns w unchanged when the top-coefficient
/// functional is numerically absent from w.
Subspace shift_interior(const Subspace& w);

/// max over basis columns b of `sub` of ||(I - P_within) S b|| / ||S b||,
/// skipping columns with ||S b|| < 1e-14.
double relative_shift_residual(const Subspace& sub, const Subspace& within);

struct CyclicSpanResult {
  Subspace space;            // carries a frontier marker on its last column
  std::vector<int> dropped;  // iterate indices dropped as dependent
};

/// Orthonormalized span of {S^n c : 0 <= n < depth}, iterates processed in
/// order, numerically dependent iterates dropped (and reported).
CyclicSpanResult cyclic_span(const hardy::CoefficientSequence& c, Eigen::Index depth);

class WanderingDimensionError : public std::runtime_error {
 public:
  explicit WanderingDimensionError(int observed)
      : std::runtime_error(
            "beurling_extract: wandering subspace has numerical dimension " +
            std::to_string(observed) + ", expected 1"),
        observed_dimension(observed) {}

  int observed_dimension;
};

struct BeurlingExtraction {
  hardy::CoefficientSequence generator;  // unit norm, first nonzero coefficient
                                         // rotated to positive real
  int wandering_dimension = 0;
  double gate_residual = 0.0;  // shift-invariance witness that admitted w
  double raw_residual = 0.0;
  std::vector<double> wandering_sigmas;  // leading singular values of the defect
  double span_distance = 0.0;  // principal-angle distance between w and
                               // cyclic_span(generator, dim w)
};

inline constexpr double kInvarianceGate = 1e-6;
inline constexpr double kWanderingSplit = 1e-6;

/// Wandering-vector extraction: certifies that w ominus S(w) is numerically
/// one-dimensional and returns its unit generator. Inputs whose
/// shift-invariance witness exceeds the gate are rejected; a wandering
/// dimension other than 1 raises WanderingDimensionError.
BeurlingExtraction beurling_extract(const Subspace& w,
                                    double invariance_gate = kInvarianceGate,
                                    double wandering_split = kWanderingSplit);

}  // namespace frameforge::shiftspace
