#include "frameforge/frames.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frameforge/prng.hpp"

namespace frameforge::frames {

namespace {

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
  return numerics::svd(m).singular_values;
}

/// Lower/upper frame bounds for the ambient space from the singular values
/// of a synthesis matrix: (sigma_m^2, sigma_1^2), with lower = 0 when the
/// system cannot span.
FrameBounds bounds_from_singulars(const Eigen::VectorXd& s, Eigen::Index ambient) {
  FrameBounds b;
  if (s.size() == 0) return b;
  b.upper = s(0) * s(0);
  if (s.size() >= ambient) {
    const double smin = s(ambient - 1);
    b.lower = smin * smin;
  }
  return b;
}

void ensure_system(const FrameSystem& fs, const char* what) {
  if (fs.synthesis.rows() == 0 || fs.synthesis.cols() == 0)
    throw std::invalid_argument(std::string(what) + ": empty system");
  if (!fs.synthesis.allFinite())
    throw std::invalid_argument(std::string(what) + ": non-finite vectors");
}

}  // namespace

FrameSystem FrameSystem::prefix(Eigen::Index n) const {
  if (n < 1 || n > count())
    throw std::invalid_argument("FrameSystem::prefix: bad length");
  return {synthesis.leftCols(n)};
}

FrameSystem FrameSystem::from_vectors(const std::vector<ComplexVector>& vectors) {
  if (vectors.empty())
    throw std::invalid_argument("FrameSystem: no vectors");
  const Eigen::Index m = vectors.front().size();
  ComplexMatrix synth(m, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != m)
      throw std::invalid_argument("FrameSystem: vector lengths differ");
    synth.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  FrameSystem fs{std::move(synth)};
  ensure_system(fs, "FrameSystem");
  return fs;
}

FrameSystem FrameSystem::from_matrix(ComplexMatrix synthesis) {
  FrameSystem fs{std::move(synthesis)};
  ensure_system(fs, "FrameSystem");
  return fs;
}

ComplexVector synthesis_apply(const FrameSystem& fs,
                              const hardy::CoefficientSequence& c) {
  ensure_system(fs, "synthesis_apply");
  const Eigen::Index len = c.coeffs.size();
  if (len > fs.count())
    throw std::invalid_argument(
        "synthesis_apply: coefficient sequence longer than the system");
  return fs.synthesis.leftCols(len) * c.coeffs;
}

FrameBounds frame_bounds(const FrameSystem& fs) {
  ensure_system(fs, "frame_bounds");
  return bounds_from_singulars(singular_values(fs.synthesis), fs.ambient_dim());
}

numerics::Subspace kernel(const FrameSystem& fs, double tol) {
  ensure_system(fs, "kernel");
  return numerics::null_space(fs.synthesis, tol);
}

RieszBasisReport riesz_basis_check(const FrameSystem& fs) {
  ensure_system(fs, "riesz_basis_check");
  const Eigen::VectorXd s = singular_values(fs.synthesis);
  RieszBasisReport report;
  report.bounds = bounds_from_singulars(s, fs.ambient_dim());
  report.is_riesz_basis = fs.count() == fs.ambient_dim() &&
                          s(s.size() - 1) > numerics::kRankTol * s(0);
  return report;
}

RieszFrameReport riesz_frame_check(const FrameSystem& fs,
                                   std::uint64_t max_subsets,
                                   std::uint64_t seed) {
  ensure_system(fs, "riesz_frame_check");
  const Eigen::Index n = fs.count();
  if (n > 20 && max_subsets == 0)
    throw std::invalid_argument(
        "riesz_frame_check: more than 20 vectors requires sampled mode "
        "(set max_subsets)");
  if (n >= 63)
    throw std::invalid_argument("riesz_frame_check: too many vectors");

  const std::uint64_t total = (std::uint64_t{1} << n) - 1;
  const bool exhaustive = max_subsets == 0 || max_subsets >= total;

  RieszFrameReport report;
  report.exhaustive = exhaustive;
  report.uniform.lower = std::numeric_limits<double>::infinity();
  report.uniform.upper = 0.0;

  SplitMix64 rng(seed);
  const std::uint64_t draws = exhaustive ? total : max_subsets;
  for (std::uint64_t t = 1; t <= draws; ++t) {
    const std::uint64_t mask = exhaustive ? t : (rng.next() % total) + 1;
    std::vector<int> indices;
    for (Eigen::Index j = 0; j < n; ++j)
      if (mask >> j & 1) indices.push_back(static_cast<int>(j));

    ComplexMatrix sub(fs.ambient_dim(), static_cast<Eigen::Index>(indices.size()));
    for (std::size_t j = 0; j < indices.size(); ++j)
      sub.col(static_cast<Eigen::Index>(j)) = fs.synthesis.col(indices[j]);

    const Eigen::VectorXd s = singular_values(sub);
    const double smax = s(0);
    if (smax == 0.0) continue;  // subfamily of zero vectors spans nothing
    // Bounds as a frame for the subfamily's own span: smallest and largest
    // nonzero singular values at the rank tolerance.
    double smin = smax;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > numerics::kRankTol * smax) smin = s(i);
    const double lower = smin * smin;
    const double upper = smax * smax;
    ++report.subsets_checked;
    if (lower < report.uniform.lower) {
      report.uniform.lower = lower;
      report.lower_witness = indices;
    }
    if (upper > report.uniform.upper) {
      report.uniform.upper = upper;
      report.upper_witness = indices;
    }
  }
  report.coverage =
      static_cast<double>(report.subsets_checked) / static_cast<double>(total);
  return report;
}

double carleson_separation(const std::vector<Complex>& eigenvalues) {
  if (eigenvalues.empty())
    throw std::invalid_argument("carleson_separation: no points");
  for (const Complex& l : eigenvalues)
    if (std::abs(l) >= 1.0)
      throw std::invalid_argument(
          "carleson_separation: points must lie inside the open disk");
  const std::size_t k = eigenvalues.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (eigenvalues[i] == eigenvalues[j])
        throw std::invalid_argument(
            "carleson_separation: repeated point (separation 0)");

  double delta = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      prod *= std::abs(eigenvalues[j] - eigenvalues[i]) /
              std::abs(1.0 - std::conj(eigenvalues[j]) * eigenvalues[i]);
    }
    delta = std::min(delta, prod);
  }
  return delta;
}

OrbitSpec OrbitSpec::balanced(std::vector<Complex> eigenvalues,
                              Eigen::Index orbit_length) {
  OrbitSpec spec;
  spec.seed = ComplexVector(static_cast<Eigen::Index>(eigenvalues.size()));
  for (std::size_t k = 0; k < eigenvalues.size(); ++k)
    spec.seed(static_cast<Eigen::Index>(k)) =
        std::sqrt(1.0 - std::norm(eigenvalues[k]));
  spec.eigenvalues = std::move(eigenvalues);
  spec.orbit_length = orbit_length;
  return spec;
}

OrbitFrame build_orbit_frame(const OrbitSpec& spec) {
  const Eigen::Index k = static_cast<Eigen::Index>(spec.eigenvalues.size());
  if (k == 0) throw std::invalid_argument("build_orbit_frame: no eigenvalues");
  if (spec.seed.size() != k)
    throw std::invalid_argument(
        "build_orbit_frame: seed size must match the eigenvalue count");
  if (spec.orbit_length < k)
    throw std::invalid_argument(
        "build_orbit_frame: orbit length below the eigenvalue count");
  if (!spec.seed.allFinite())
    throw std::invalid_argument("build_orbit_frame: non-finite seed");

  OrbitFrame out;
  out.diagnostics.separation = carleson_separation(spec.eigenvalues);

  out.diagnostics.ratio_min = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < k; ++i) {
    const double mag = std::abs(spec.seed(i));
    if (mag == 0.0)
      out.diagnostics.zero_seed_components.push_back(static_cast<int>(i));
    const double ratio = mag / std::sqrt(1.0 - std::norm(spec.eigenvalues[i]));
    out.diagnostics.ratio_min = std::min(out.diagnostics.ratio_min, ratio);
    out.diagnostics.ratio_max = std::max(out.diagnostics.ratio_max, ratio);
  }

  ComplexMatrix synth(k, spec.orbit_length);
  ComplexVector x = spec.seed;
  for (Eigen::Index n = 0; n < spec.orbit_length; ++n) {
    synth.col(n) = x;
    for (Eigen::Index i = 0; i < k; ++i) x(i) *= spec.eigenvalues[i];
  }
  out.system = FrameSystem{std::move(synth)};
  return out;
}

ExcessReport excess_test(const FrameSystem& fs) {
  ensure_system(fs, "excess_test");
  const Eigen::VectorXd s = singular_values(fs.synthesis);
  const double smax = s(0);
  if (s.size() < fs.ambient_dim() ||
      s(fs.ambient_dim() - 1) <= numerics::kRankTol * smax)
    throw std::invalid_argument("excess_test: system is not a frame");

  const Eigen::Index n = fs.count();
  ExcessReport report;
  report.survives.resize(n);
  report.min_ratio.resize(n);
  report.all_deletions_survive = true;
  bool any = false;
  ComplexMatrix deleted(fs.ambient_dim(), n - 1);
  for (Eigen::Index del = 0; del < n; ++del) {
    if (del > 0) deleted.leftCols(del) = fs.synthesis.leftCols(del);
    if (del < n - 1)
      deleted.rightCols(n - 1 - del) = fs.synthesis.rightCols(n - 1 - del);
    const Eigen::VectorXd sd = singular_values(deleted);
    const double smin_amb =
        sd.size() >= fs.ambient_dim() ? sd(fs.ambient_dim() - 1) : 0.0;
    const double ratio = smin_amb / smax;
    const bool keep = ratio > kExcessTol;
    report.survives[del] = keep;
    report.min_ratio[del] = ratio;
    report.all_deletions_survive = report.all_deletions_survive && keep;
    any = any || keep;
  }
  report.exact = !any;
  return report;
}

OperatorRecovery recover_operator(const FrameSystem& fs) {
  ensure_system(fs, "recover_operator");
  const Eigen::Index m = fs.ambient_dim();
  const Eigen::Index n = fs.count();
  if (n < m + 1)
    throw std::invalid_argument(
        "recover_operator: need at least ambient_dim + 1 vectors");
  const Eigen::VectorXd s = singular_values(fs.synthesis);
  if (s(m - 1) <= numerics::kRankTol * s(0))
    throw std::invalid_argument(
        "recover_operator: vectors do not span the ambient space");

  const ComplexMatrix a = fs.synthesis.leftCols(n - 1);
  const ComplexMatrix b = fs.synthesis.rightCols(n - 1);
  OperatorRecovery out;
  out.op = numerics::least_squares(a.transpose(), b.transpose()).transpose();
  out.fit_residual = (out.op * a - b).norm();
  out.norm_estimate = singular_values(out.op)(0);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kBoundedConsistent:
      return "BOUNDED-CONSISTENT";
    case Verdict::kUnboundedSuspect:
      return "UNBOUNDED-SUSPECT";
    case Verdict::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

BoundednessReport boundedness_probe(const FrameSystem& fs,
                                    const FrameSystem* finer) {
  ensure_system(fs, "boundedness_probe");
  BoundednessReport report;

  const numerics::Subspace ker = kernel(fs);
  report.kernel_dimension = ker.dimension();

  bool residual_known = true;
  if (ker.trivial()) {
    report.note = "trivial kernel";
    // With an injective synthesis the only bounded-orbit alternative is a
    // Riesz basis; the kernel side then carries no obstruction.
    if (!riesz_basis_check(fs).is_riesz_basis) {
      report.note += "; synthesis not square-invertible";
      residual_known = false;
    }
  } else {
    report.raw_kernel_residual = shiftspace::invariance_residual(ker).raw_value;
    report.kernel_invariance_residual =
        shiftspace::relative_shift_residual(shiftspace::shift_interior(ker), ker);
  }

  // Operator-norm stability across two truncation levels.
  const Eigen::Index m = fs.ambient_dim();
  double norm_coarse = 0.0;
  double norm_fine = 0.0;
  bool norms_known = false;
  if (finer != nullptr) {
    if (finer->ambient_dim() != m || finer->count() <= fs.count())
      throw std::invalid_argument(
          "boundedness_probe: finer system must extend the coarse one");
    norm_coarse = recover_operator(fs).norm_estimate;
    norm_fine = recover_operator(*finer).norm_estimate;
    norms_known = true;
  } else if (fs.count() / 2 >= m + 1) {
    norm_coarse = recover_operator(fs.prefix(fs.count() / 2)).norm_estimate;
    norm_fine = recover_operator(fs).norm_estimate;
    norms_known = true;
  } else if (fs.count() >= m + 1) {
    norm_fine = norm_coarse = recover_operator(fs).norm_estimate;
    report.note += report.note.empty() ? "" : "; ";
    report.note += "single truncation level";
    norms_known = true;
  } else {
    report.note += report.note.empty() ? "" : "; ";
    report.note += "operator fit skipped (too few vectors)";
  }
  if (norms_known) {
    report.operator_norm_estimate = norm_fine;
    report.norm_growth = norm_coarse > 0.0 ? norm_fine / norm_coarse : 1.0;
  }

  const double res = report.kernel_invariance_residual;
  const bool residual_ok = residual_known && res < 1e-6;
  const bool residual_bad = residual_known && res > 0.1;
  const bool growth_ok = norms_known && report.norm_growth < 1.05;
  const bool growth_bad = norms_known && report.norm_growth > 2.0;

  if (residual_bad || growth_bad)
    report.verdict = Verdict::kUnboundedSuspect;
  else if (residual_ok && (growth_ok || !norms_known))
    report.verdict = Verdict::kBoundedConsistent;
  else
    report.verdict = Verdict::kInconclusive;
  return report;
}

AdjointOrbitCheck adjoint_orbit_identity_check(const ComplexMatrix& a,
                                               const ComplexVector& f,
                                               const ComplexVector& g,
                                               int n_max) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("adjoint_orbit_identity_check: square matrix required");
  if (f.size() != a.rows() || g.size() != a.rows())
    throw std::invalid_argument("adjoint_orbit_identity_check: dimension mismatch");
  if (n_max < 0)
    throw std::invalid_argument("adjoint_orbit_identity_check: n_max must be >= 0");

  AdjointOrbitCheck out;
  const ComplexMatrix ah = a.adjoint();
  ComplexVector x = f;  // a^n f
  ComplexVector y = g;  // (a*)^n g
  for (int n = 0; n <= n_max; ++n) {
    // <a^n f, g> versus <f, (a*)^n g>
    const Complex lhs = g.dot(x);
    const Complex rhs = y.dot(f);
    out.max_deviation = std::max(out.max_deviation, std::abs(lhs - rhs));
    out.scale = std::max({out.scale, x.norm() * g.norm(), f.norm() * y.norm()});
    if (n < n_max) {
      x = a * x;
      y = ah * y;
    }
  }
  return out;
}

}  // namespace frameforge::frames
