#include "frameforge/numerics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace frameforge::numerics {

namespace {

void ensure_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite())
    throw std::invalid_argument(std::string(what) +
                                ": matrix has non-finite entries");
}

void ensure_nonempty(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument(std::string(what) + ": empty matrix");
}

// Jacobi is the more accurate choice for small problems, BDC scales better.
constexpr Eigen::Index kJacobiLimit = 16;

}  // namespace

int SvdResult::rank(double tol) const {
  if (singular_values.size() == 0) return 0;
  const double cutoff = tol * singular_values(0);
  int r = 0;
  for (Eigen::Index i = 0; i < singular_values.size(); ++i)
    if (singular_values(i) > cutoff) ++r;
  return r;
}

Subspace Subspace::trivial_space(Eigen::Index ambient) {
  Subspace s;
  s.basis = ComplexMatrix::Zero(ambient, 0);
  return s;
}

Subspace Subspace::full_space(Eigen::Index ambient) {
  Subspace s;
  s.basis = ComplexMatrix::Identity(ambient, ambient);
  return s;
}

Subspace Subspace::line(const ComplexVector& direction) {
  double nrm = direction.norm();
  if (nrm == 0.0)
    throw std::invalid_argument("Subspace::line: zero direction");
  Subspace s;
  s.basis = direction / nrm;
  return s;
}

SvdResult svd(const ComplexMatrix& m) {
  ensure_nonempty(m, "svd");
  ensure_finite(m, "svd");
  SvdResult out;
  if (std::min(m.rows(), m.cols()) <= kJacobiLimit) {
    Eigen::JacobiSVD<ComplexMatrix> dec(m,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
    out.singular_values = dec.singularValues();
    out.left_basis = dec.matrixU();
    out.right_basis = dec.matrixV();
  } else {
    Eigen::BDCSVD<ComplexMatrix> dec(m,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
    out.singular_values = dec.singularValues();
    out.left_basis = dec.matrixU();
    out.right_basis = dec.matrixV();
  }
  return out;
}

Subspace null_space(const ComplexMatrix& m, double tol) {
  ensure_nonempty(m, "null_space");
  ensure_finite(m, "null_space");
  if (tol <= 0.0) throw std::invalid_argument("null_space: tol must be > 0");

  Eigen::VectorXd sv;
  ComplexMatrix v;
  if (std::min(m.rows(), m.cols()) <= kJacobiLimit) {
    Eigen::JacobiSVD<ComplexMatrix> dec(m, Eigen::ComputeFullV);
    sv = dec.singularValues();
    v = dec.matrixV();
  } else {
    Eigen::BDCSVD<ComplexMatrix> dec(m, Eigen::ComputeFullV);
    sv = dec.singularValues();
    v = dec.matrixV();
  }

  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * smax) ++rank;

  Subspace out;
  out.basis = v.rightCols(m.cols() - rank);
  return out;
}

ComplexMatrix least_squares(const ComplexMatrix& a, const ComplexMatrix& b) {
  ensure_nonempty(a, "least_squares");
  ensure_finite(a, "least_squares");
  ensure_finite(b, "least_squares");
  if (a.rows() != b.rows())
    throw std::invalid_argument("least_squares: row counts differ (" +
                                std::to_string(a.rows()) + " vs " +
                                std::to_string(b.rows()) + ")");
  if (std::min(a.rows(), a.cols()) <= kJacobiLimit) {
    Eigen::JacobiSVD<ComplexMatrix> dec(a,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
    dec.setThreshold(kRankTol);
    return dec.solve(b);
  }
  Eigen::BDCSVD<ComplexMatrix> dec(a,
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
  dec.setThreshold(kRankTol);
  return dec.solve(b);
}

double principal_angle_distance(const Subspace& p, const Subspace& q) {
  if (p.ambient() != q.ambient())
    throw std::invalid_argument(
        "principal_angle_distance: ambient dimensions differ");

  auto one_sided = [](const Subspace& x, const Subspace& into) {
    if (x.trivial()) return 0.0;
    ComplexMatrix resid = x.basis;
    if (!into.trivial())
      resid -= into.basis * (into.basis.adjoint() * x.basis);
    Eigen::JacobiSVD<ComplexMatrix> dec(resid);
    double s = dec.singularValues().size() > 0 ? dec.singularValues()(0) : 0.0;
    return std::min(s, 1.0);
  };

  return std::max(one_sided(p, q), one_sided(q, p));
}

OrthonormalizeResult orthonormalize(const ComplexMatrix& columns, double tol) {
  ensure_finite(columns, "orthonormalize");
  OrthonormalizeResult out;

  double scale = 0.0;
  for (Eigen::Index j = 0; j < columns.cols(); ++j)
    scale = std::max(scale, columns.col(j).norm());

  ComplexMatrix q(columns.rows(), columns.cols());
  Eigen::Index kept = 0;
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    ComplexVector w = columns.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index i = 0; i < kept; ++i)
        w -= q.col(i) * q.col(i).dot(w);
    const double nrm = w.norm();
    if (nrm > tol * scale) {
      q.col(kept) = w / nrm;
      out.kept.push_back(static_cast<int>(j));
      ++kept;
    }
  }
  out.space.basis = q.leftCols(kept);
  return out;
}

Subspace orthogonal_complement(const Subspace& w) {
  if (w.trivial()) return Subspace::full_space(w.ambient());
  if (w.dimension() == w.ambient()) return Subspace::trivial_space(w.ambient());
  return null_space(w.basis.adjoint());
}

}  // namespace frameforge::numerics
