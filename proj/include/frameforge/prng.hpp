#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>

namespace frameforge {

// SplitMix64. Used for every random quantity in tests and scenario sampling
// so that sequences are reproducible across compilers and standard libraries
// (std:: distributions are implementation-defined).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

  std::complex<double> complex_symmetric() {
    double re = symmetric();  // evaluation order pinned
    double im = symmetric();
    return {re, im};
  }

 private:
  std::uint64_t state_;
};

inline Eigen::VectorXcd random_vector(SplitMix64& rng, Eigen::Index n) {
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_symmetric();
  return v;
}

inline Eigen::VectorXcd random_unit_vector(SplitMix64& rng, Eigen::Index n) {
  Eigen::VectorXcd v = random_vector(rng, n);
  double nrm = v.norm();
  if (nrm == 0.0) {
    v(0) = 1.0;
    nrm = 1.0;
  }
  return v / nrm;
}

inline Eigen::MatrixXcd random_matrix(SplitMix64& rng, Eigen::Index rows,
                                      Eigen::Index cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.complex_symmetric();
  return m;
}

}  // namespace frameforge
