#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace frameforge::numerics {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Relative rank threshold used everywhere a rank decision is made:
/// a singular value counts as nonzero when sigma > kRankTol * sigma_max.
inline constexpr double kRankTol = 1e-9;

struct SvdResult {
  Eigen::VectorXd singular_values;  // descending, all >= 0
  ComplexMatrix left_basis;         // orthonormal columns
  ComplexMatrix right_basis;        // orthonormal columns

  int rank(double tol = kRankTol) const;
};

/// Orthonormal-basis representation of a subspace of a truncated coefficient
/// space. Zero columns encode the trivial subspace.
struct Subspace {
  ComplexMatrix basis;

  // Number of trailing basis columns forming the growth frontier of a
  // Krylov-style construction (set by cyclic_span, 0 otherwise).
  // Shift-invariance checks skip frontier columns: the shift of the newest
  // iterate leaves any finite section of the generated filtration by
  // construction, which says nothing about invariance of the limit object.
  int frontier_columns = 0;

  Eigen::Index ambient() const { return basis.rows(); }
  Eigen::Index dimension() const { return basis.cols(); }
  bool trivial() const { return basis.cols() == 0; }

  static Subspace trivial_space(Eigen::Index ambient);
  static Subspace full_space(Eigen::Index ambient);
  static Subspace line(const ComplexVector& direction);
};

SvdResult svd(const ComplexMatrix& m);

/// Orthonormal basis of the span of right singular vectors with
/// sigma <= tol * sigma_max. An all-zero matrix has the full ambient space
/// as its null space.
Subspace null_space(const ComplexMatrix& m, double tol = kRankTol);

/// Minimum-Frobenius-norm X minimizing ||a X - b||_F.
ComplexMatrix least_squares(const ComplexMatrix& a, const ComplexMatrix& b);

/// Sine of the largest principal angle (projector-gap distance):
/// 0 iff the subspaces coincide within numerical rank, 1 when some direction
/// of one subspace is orthogonal to all of the other.
double principal_angle_distance(const Subspace& p, const Subspace& q);

struct OrthonormalizeResult {
  Subspace space;
  std::vector<int> kept;  // indices of input columns that survived
};

/// Modified Gram-Schmidt in column order with one reorthogonalization pass.
/// Columns whose residual falls below tol times the largest input column
/// norm are dropped as numerically dependent.
OrthonormalizeResult orthonormalize(const ComplexMatrix& columns,
                                    double tol = kRankTol);

Subspace orthogonal_complement(const Subspace& w);

}  // namespace frameforge::numerics
