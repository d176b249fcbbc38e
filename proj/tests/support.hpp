#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "frameforge/frames.hpp"
#include "frameforge/hardy.hpp"
#include "frameforge/numerics.hpp"
#include "frameforge/prng.hpp"

namespace test_support {

using frameforge::SplitMix64;
using frameforge::numerics::Complex;
using frameforge::numerics::ComplexMatrix;
using frameforge::numerics::ComplexVector;

inline ComplexVector unit(Eigen::Index n, Eigen::Index k) {
  ComplexVector v = ComplexVector::Zero(n);
  v(k) = 1.0;
  return v;
}

/// Eigenvalue route to frame bounds: extreme eigenvalues of the frame
/// operator U U^H computed with a Hermitian eigensolver. Independent of the
/// singular-value route used by the implementation.
inline std::pair<double, double> frame_bounds_eig_oracle(const ComplexMatrix& u) {
  const ComplexMatrix gram = u * u.adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  return {std::max(ev(0), 0.0), std::max(ev(ev.size() - 1), 0.0)};
}

/// QR route to numerical rank, independent of the SVD used in the library.
inline Eigen::Index qr_rank_oracle(const ComplexMatrix& m, double tol = 1e-9) {
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(m);
  qr.setThreshold(tol);
  return qr.rank();
}

/// Diagonal-model orbit synthesis built directly from powers, independent of
/// frames::build_orbit_frame's iterative construction.
inline ComplexMatrix orbit_synthesis_oracle(const std::vector<Complex>& eigs,
                                            const ComplexVector& seed,
                                            Eigen::Index length) {
  const Eigen::Index k = static_cast<Eigen::Index>(eigs.size());
  ComplexMatrix u(k, length);
  for (Eigen::Index n = 0; n < length; ++n)
    for (Eigen::Index i = 0; i < k; ++i)
      u(i, n) = seed(i) * std::pow(eigs[static_cast<std::size_t>(i)],
                                   static_cast<double>(n));
  return u;
}

inline std::vector<Complex> two_adic_schedule(int count) {
  std::vector<Complex> eigs(count);
  for (int k = 0; k < count; ++k) eigs[k] = 1.0 - std::pow(2.0, -(k + 1.0));
  return eigs;
}

/// Canonical zero sets used across tests, indexed by degree.
inline std::vector<Complex> canonical_zeros(int degree) {
  const std::vector<Complex> pool = {
      {0.5, 0.0},  {0.0, -0.3},  {0.2, 0.2},  {-0.6, 0.0},
      {0.0, 0.7},  {-0.4, -0.4}, {0.55, -0.2}, {0.3, 0.6}};
  return {pool.begin(), pool.begin() + degree};
}

}  // namespace test_support
