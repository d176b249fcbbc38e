#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frameforge/hardy.hpp"
#include "frameforge/numerics.hpp"
#include "frameforge/shiftspace.hpp"

namespace frameforge::frames {

using numerics::Complex;
using numerics::ComplexMatrix;
using numerics::ComplexVector;

/// Ordered system of vectors in a common ambient space; column n of the
/// synthesis matrix is vector n.
struct FrameSystem {
  ComplexMatrix synthesis;

  Eigen::Index ambient_dim() const { return synthesis.rows(); }
  Eigen::Index count() const { return synthesis.cols(); }
  ComplexVector vector(Eigen::Index n) const { return synthesis.col(n); }

  FrameSystem prefix(Eigen::Index n) const;

  static FrameSystem from_vectors(const std::vector<ComplexVector>& vectors);
  static FrameSystem from_matrix(ComplexMatrix synthesis);
};

struct FrameBounds {
  double lower = 0.0;  // smallest ambient singular value squared
  double upper = 0.0;  // largest singular value squared
};

/// Synthesis application: sum of c_n * f_n (c zero-padded up to the count).
ComplexVector synthesis_apply(const FrameSystem& fs,
                              const hardy::CoefficientSequence& c);

FrameBounds frame_bounds(const FrameSystem& fs);

/// Kernel of the synthesis matrix at the global rank tolerance.
numerics::Subspace kernel(const FrameSystem& fs,
                          double tol = numerics::kRankTol);

struct RieszBasisReport {
  bool is_riesz_basis = false;
  FrameBounds bounds;
};

/// Square synthesis with invertible matrix at the rank tolerance.
RieszBasisReport riesz_basis_check(const FrameSystem& fs);

struct RieszFrameReport {
  FrameBounds uniform;  // infimum lower / supremum upper over subfamilies
  std::vector<int> lower_witness;  // first subfamily attaining the infimum
  std::vector<int> upper_witness;  // first subfamily attaining the supremum
  std::uint64_t subsets_checked = 0;
  bool exhaustive = true;
  double coverage = 1.0;  // fraction of nonempty subfamilies visited
};

/// Frame bounds of every nonempty subfamily, each taken as a frame for its
/// own span. Exhaustive enumeration up to 20 vectors; beyond that a sampled
/// check must be requested via max_subsets.
RieszFrameReport riesz_frame_check(const FrameSystem& fs,
                                   std::uint64_t max_subsets = 0,
                                   std::uint64_t seed = 0);

/// min over k of prod_{j != k} |lambda_j - lambda_k| / |1 - conj(lambda_j)
/// lambda_k|; 1 for a single point. Repeated points are rejected.
double carleson_separation(const std::vector<Complex>& eigenvalues);

/// Diagonal-model normal-operator orbit: T = diag(lambda), vectors T^n phi.
struct OrbitSpec {
  std::vector<Complex> eigenvalues;  // distinct, inside the open disk
  ComplexVector seed;                // phi, one component per eigenvalue
  Eigen::Index orbit_length = 0;

  /// Seed with |phi_k| = sqrt(1 - |lambda_k|^2): every component sits at
  /// ratio exactly 1.
  static OrbitSpec balanced(std::vector<Complex> eigenvalues,
                            Eigen::Index orbit_length);
};

struct OrbitDiagnostics {
  double separation = 1.0;
  double ratio_min = 0.0;  // range of |phi_k| / sqrt(1 - |lambda_k|^2)
  double ratio_max = 0.0;
  std::vector<int> zero_seed_components;
};

struct OrbitFrame {
  FrameSystem system;
  OrbitDiagnostics diagnostics;
};

OrbitFrame build_orbit_frame(const OrbitSpec& spec);

/// Deletion threshold: a deletion survives when the deleted system's
/// smallest ambient singular value stays above kExcessTol times the original
/// largest singular value.
inline constexpr double kExcessTol = 1e-8;

struct ExcessReport {
  std::vector<bool> survives;      // per deleted index: still complete
  std::vector<double> min_ratio;   // sigma_min(deleted) / sigma_max(original)
  bool all_deletions_survive = false;
  bool exact = false;  // no single deletion leaves the system complete
};

ExcessReport excess_test(const FrameSystem& fs);

struct OperatorRecovery {
  ComplexMatrix op;           // least-squares fit T with T f_n ~ f_{n+1}
  double fit_residual = 0.0;  // ||T [f_0..f_{N-2}] - [f_1..f_{N-1}]||_F
  double norm_estimate = 0.0;
};

/// Least-squares recovery of a one-step evolution operator from consecutive
/// pairs. Requires at least ambient_dim + 1 spanning vectors.
OperatorRecovery recover_operator(const FrameSystem& fs);

enum class Verdict { kBoundedConsistent, kUnboundedSuspect, kInconclusive };

std::string to_string(Verdict v);

struct BoundednessReport {
  Verdict verdict = Verdict::kInconclusive;
  Eigen::Index kernel_dimension = 0;
  double kernel_invariance_residual = 0.0;  // truncation-interior residual
  double raw_kernel_residual = 0.0;
  double operator_norm_estimate = 0.0;  // at the finer level
  double norm_growth = 1.0;             // finer / coarser estimate
  std::string note;
};

/// Couples the kernel's shift-invariance with the stability of the recovered
/// one-step operator across two truncation levels. When `finer` is supplied
/// it provides the second level; otherwise the first half of fs is used as
/// the coarse level. INCONCLUSIVE is a first-class outcome.
BoundednessReport boundedness_probe(const FrameSystem& fs,
                                    const FrameSystem* finer = nullptr);

struct AdjointOrbitCheck {
  double max_deviation = 0.0;
  double scale = 1.0;  // max over n of the orbit/coorbit inner-product scale
};

/// max over 0 <= n <= n_max of |<a^n f, g> - <f, (a*)^n g>|.
AdjointOrbitCheck adjoint_orbit_identity_check(const ComplexMatrix& a,
                                               const ComplexVector& f,
                                               const ComplexVector& g,
                                               int n_max);

}  // namespace frameforge::frames
