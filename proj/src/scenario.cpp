#include "frameforge/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "frameforge/frames.hpp"
#include "frameforge/hardy.hpp"
#include "frameforge/numerics.hpp"
#include "frameforge/prng.hpp"
#include "frameforge/shiftspace.hpp"

namespace frameforge::cli {

namespace {

using json = nlohmann::json;
using numerics::Complex;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

double need_positive(const json& p, const char* key, double dflt) {
  if (p.contains(key) && !p[key].is_number())
    fail(std::string("parameter '") + key + "' must be a number");
  const double v = p.value(key, dflt);
  if (!(v > 0.0)) fail(std::string("parameter '") + key + "' must be > 0");
  return v;
}

int need_int(const json& p, const char* key, int dflt, int min_value) {
  if (p.contains(key) && !p[key].is_number_integer())
    fail(std::string("parameter '") + key + "' must be an integer");
  const int v = p.value(key, dflt);
  if (v < min_value)
    fail(std::string("parameter '") + key + "' must be >= " +
         std::to_string(min_value));
  return v;
}

int need_truncation(const json& p, int dflt) {
  return need_int(p, "truncation", dflt, 16);
}

Complex parse_complex(const json& v, const char* what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  fail(std::string(what) + ": expected a number or an [re, im] pair");
}

std::vector<Complex> parse_complex_list(const json& v, const char* what) {
  if (!v.is_array()) fail(std::string(what) + ": expected an array");
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const json& item : v) out.push_back(parse_complex(item, what));
  return out;
}

hardy::BlaschkeSpec parse_blaschke(const json& p) {
  hardy::BlaschkeSpec spec;
  spec.zeros = parse_complex_list(p.value("zeros", json::array()), "zeros");
  if (p.contains("unimodular"))
    spec.unimodular = parse_complex(p["unimodular"], "unimodular");
  spec.monomial_power = need_int(p, "monomial_power", 0, 0);
  if (p.contains("declared_tail_sum"))
    spec.declared_tail_sum = p["declared_tail_sum"].get<double>();
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return spec;
}

std::vector<Complex> parse_eigenvalues(const json& p) {
  if (p.contains("eigenvalues"))
    return parse_complex_list(p["eigenvalues"], "eigenvalues");
  if (p.contains("schedule")) {
    const json& sched = p["schedule"];
    if (!sched.is_object()) fail("schedule: expected an object");
    const double base = sched.value("base", 2.0);
    if (!(base > 1.0)) fail("schedule.base must be > 1");
    const int count = sched.contains("count") ? sched["count"].get<int>() : 8;
    if (count < 1) fail("schedule.count must be >= 1");
    std::vector<Complex> eigs(count);
    for (int k = 0; k < count; ++k)
      eigs[k] = 1.0 - std::pow(base, -(k + 1.0));
    return eigs;
  }
  fail("either 'eigenvalues' or 'schedule' is required");
}

frames::OrbitSpec parse_orbit(const json& p, Eigen::Index orbit_length) {
  std::vector<Complex> eigs = parse_eigenvalues(p);
  const json seed_param = p.value("seed_components", json("balanced"));
  frames::OrbitSpec spec;
  if (seed_param.is_string() && seed_param.get<std::string>() == "balanced") {
    spec = frames::OrbitSpec::balanced(std::move(eigs), orbit_length);
  } else if (seed_param.is_array()) {
    const std::vector<Complex> comps =
        parse_complex_list(seed_param, "seed_components");
    if (comps.size() != eigs.size())
      fail("seed_components must match the eigenvalue count");
    spec.eigenvalues = std::move(eigs);
    spec.seed = numerics::ComplexVector(static_cast<Eigen::Index>(comps.size()));
    for (std::size_t i = 0; i < comps.size(); ++i)
      spec.seed(static_cast<Eigen::Index>(i)) = comps[i];
    spec.orbit_length = orbit_length;
  } else {
    fail("seed_components must be \"balanced\" or an array");
  }
  return spec;
}

ReportRecord make_record(const Scenario& s, std::string metric, double value,
                         double tolerance, bool pass, std::string note,
                         std::string seed = "deterministic") {
  ReportRecord r;
  r.scenario = s.name;
  r.metric = std::move(metric);
  r.value = value;
  r.tolerance = tolerance;
  r.pass = pass;
  r.seed = std::move(seed);
  r.note = std::move(note);
  return r;
}

void write_plot_data(const std::string& path,
                     const std::vector<std::pair<double, double>>& points) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw std::runtime_error("plot data: cannot open '" + path + "'");
  for (const auto& [x, y] : points)
    file << format_value(x) << ' ' << format_value(y) << '\n';
}

std::string indices_to_string(const std::vector<int>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(idx[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// blaschke-certify

struct CertifyConfig {
  hardy::BlaschkeSpec spec;
  int truncation;
  int samples;
  double tol;
  double radius;
  std::string plot_path;
};

CertifyConfig parse_certify(const json& p) {
  CertifyConfig c;
  c.spec = parse_blaschke(p);
  c.truncation = need_truncation(p, 256);
  c.samples = need_int(p, "samples", 1024, 64);
  c.tol = need_positive(p, "tol", 1e-6);
  c.radius = p.value("radius", 1.0);
  if (!(c.radius > 0.0) || c.radius > 1.0) fail("radius must lie in (0, 1]");
  c.plot_path = p.value("plot_path", "");
  return c;
}

void execute_certify(const Scenario& s, const CertifyConfig& c,
                     std::vector<ReportRecord>& out) {
  const hardy::BlaschkeSeries series =
      hardy::blaschke_to_hardy(c.spec, c.truncation);
  const hardy::InnerReport rep =
      hardy::is_inner(series.function, c.samples, c.tol, c.radius);

  std::ostringstream note;
  note << "hardy.is_inner; radius=" << format_value(rep.radius)
       << "; interior_radius_deviation=" << format_value(rep.interior_deviation);
  out.push_back(make_record(s, "max_modulus_deviation", rep.max_deviation,
                            c.tol, rep.certified, note.str()));
  out.push_back(make_record(s, "series_l2_norm", rep.norm, 1.0 + 1e-8,
                            rep.norm <= 1.0 + 1e-8, "hardy.blaschke_to_hardy"));
  out.push_back(make_record(s, "truncated_tail_mass", series.truncated_mass,
                            0.0, true, "hardy.blaschke_to_hardy; informational"));

  if (!c.plot_path.empty()) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(c.samples);
    for (int i = 0; i < c.samples; ++i) {
      const double theta = 2.0 * M_PI * i / c.samples;
      const Complex z = std::polar(c.radius, theta);
      pts.emplace_back(theta, std::abs(hardy::evaluate(series.function, z)));
    }
    write_plot_data(c.plot_path, pts);
  }
}

// ---------------------------------------------------------------------------
// beurling-roundtrip

struct RoundtripConfig {
  hardy::BlaschkeSpec spec;
  int truncation;
  int depth;
  int samples;
  double invariance_tol;
  double overlap_tol;
  double inner_tol;
};

RoundtripConfig parse_roundtrip(const json& p) {
  RoundtripConfig c;
  c.spec = parse_blaschke(p);
  if (c.spec.degree() < 1) fail("beurling-roundtrip needs degree >= 1");
  c.truncation = need_truncation(p, 256);
  c.depth = need_int(p, "depth", c.truncation / 2, 1);
  if (c.depth > c.truncation) fail("depth must be <= truncation");
  c.samples = need_int(p, "samples", 1024, 64);
  c.invariance_tol = need_positive(p, "invariance_tol", 1e-8);
  c.overlap_tol = need_positive(p, "overlap_tol", 1e-6);
  c.inner_tol = need_positive(p, "inner_tol", 1e-4);
  return c;
}

void execute_roundtrip(const Scenario& s, const RoundtripConfig& c,
                       std::vector<ReportRecord>& out) {
  const hardy::BlaschkeSeries series =
      hardy::blaschke_to_hardy(c.spec, c.truncation);
  const hardy::CoefficientSequence gen = hardy::v_inverse(series.function);
  const shiftspace::CyclicSpanResult span = shiftspace::cyclic_span(gen, c.depth);

  out.push_back(make_record(
      s, "cyclic_span_dimension", static_cast<double>(span.space.dimension()),
      0.0, span.space.dimension() == c.depth,
      "shiftspace.cyclic_span; dropped=" + std::to_string(span.dropped.size())));

  const shiftspace::InvarianceReport inv =
      shiftspace::invariance_residual(span.space);
  std::ostringstream inv_note;
  inv_note << "shiftspace.invariance_residual; raw=" << format_value(inv.raw_value)
           << "; excluded_frontier=" << inv.excluded_frontier
           << "; excluded_zero_image=" << inv.excluded_zero_image;
  out.push_back(make_record(s, "invariance_residual", inv.value,
                            c.invariance_tol, inv.value <= c.invariance_tol,
                            inv_note.str()));

  const shiftspace::BeurlingExtraction ext =
      shiftspace::beurling_extract(span.space);
  std::ostringstream wnote;
  wnote << "shiftspace.beurling_extract; sigmas=";
  for (std::size_t i = 0; i < std::min<std::size_t>(3, ext.wandering_sigmas.size()); ++i)
    wnote << (i ? " " : "") << format_value(ext.wandering_sigmas[i]);
  out.push_back(make_record(s, "wandering_dimension",
                            static_cast<double>(ext.wandering_dimension), 0.0,
                            ext.wandering_dimension == 1, wnote.str()));

  const double overlap = std::abs(gen.coeffs.dot(ext.generator.coeffs));
  out.push_back(make_record(
      s, "generator_overlap", overlap, 1.0 - c.overlap_tol,
      overlap >= 1.0 - c.overlap_tol,
      "shiftspace.beurling_extract; comparison value >= tolerance"));

  const hardy::InnerReport inner =
      hardy::is_inner(hardy::v_map(ext.generator), c.samples, c.inner_tol);
  out.push_back(make_record(s, "generator_inner_deviation", inner.max_deviation,
                            c.inner_tol, inner.certified, "hardy.is_inner"));

  out.push_back(make_record(s, "span_distance", ext.span_distance, 0.0, true,
                            "numerics.principal_angle_distance; informational"));
}

// ---------------------------------------------------------------------------
// orbit-frame

struct OrbitConfig {
  json params;  // orbit spec parsed lazily per length
  std::vector<int> lengths;
  int excess_length;
  double separation_min;
  double stability_tol;
  int sample_count;
  std::uint64_t sample_seed;
  bool balanced;
  std::string plot_path;
};

OrbitConfig parse_orbit_config(const json& p) {
  OrbitConfig c;
  c.params = p;
  parse_orbit(p, 1024);  // validate eigenvalues/seed shape up front
  if (p.contains("lengths")) {
    if (!p["lengths"].is_array() || p["lengths"].empty())
      fail("lengths must be a nonempty array");
    for (const json& v : p["lengths"]) {
      if (!v.is_number_integer() || v.get<int>() < 1)
        fail("lengths entries must be positive integers");
      c.lengths.push_back(v.get<int>());
    }
  } else {
    c.lengths = {64, 128, 256};
  }
  std::sort(c.lengths.begin(), c.lengths.end());
  c.excess_length = need_int(p, "excess_length", c.lengths.front(), 1);
  c.separation_min = need_positive(p, "separation_min", 0.1);
  c.stability_tol = need_positive(p, "stability_tol", 0.05);
  c.sample_count = need_int(p, "sample_count", 100, 0);
  c.sample_seed = p.value("seed", std::uint64_t{0});
  const json seed_param = p.value("seed_components", json("balanced"));
  c.balanced = seed_param.is_string();
  c.plot_path = p.value("plot_path", "");
  return c;
}

void execute_orbit(const Scenario& s, const OrbitConfig& c,
                   std::vector<ReportRecord>& out) {
  const int max_len = std::max(
      c.excess_length, *std::max_element(c.lengths.begin(), c.lengths.end()));
  const frames::OrbitSpec spec = parse_orbit(c.params, max_len);
  if (max_len < static_cast<int>(spec.eigenvalues.size()))
    throw std::runtime_error("orbit lengths below the eigenvalue count");
  const frames::OrbitFrame orbit = frames::build_orbit_frame(spec);

  out.push_back(make_record(
      s, "carleson_separation", orbit.diagnostics.separation, c.separation_min,
      orbit.diagnostics.separation > c.separation_min,
      "frames.carleson_separation; comparison value > tolerance"));

  const bool ratios_unit = orbit.diagnostics.ratio_min == 1.0 &&
                           orbit.diagnostics.ratio_max == 1.0;
  out.push_back(make_record(s, "seed_ratio_min", orbit.diagnostics.ratio_min,
                            0.0, !c.balanced || ratios_unit,
                            c.balanced
                                ? "frames.build_orbit_frame; balanced seed, exact"
                                : "frames.build_orbit_frame; informational"));
  out.push_back(make_record(s, "seed_ratio_max", orbit.diagnostics.ratio_max,
                            0.0, !c.balanced || ratios_unit,
                            c.balanced
                                ? "frames.build_orbit_frame; balanced seed, exact"
                                : "frames.build_orbit_frame; informational"));

  std::vector<std::pair<double, double>> plot;
  std::vector<double> lowers;
  for (int len : c.lengths) {
    const frames::FrameBounds b = frames::frame_bounds(orbit.system.prefix(len));
    lowers.push_back(b.lower);
    plot.emplace_back(static_cast<double>(len), b.lower);
    out.push_back(make_record(s, "lower_frame_bound_N" + std::to_string(len),
                              b.lower, 0.0, true,
                              "frames.frame_bounds; informational"));
    out.push_back(make_record(s, "upper_frame_bound_N" + std::to_string(len),
                              b.upper, 0.0, true,
                              "frames.frame_bounds; informational"));
  }

  if (c.lengths.size() >= 2) {
    const int na = c.lengths[c.lengths.size() - 2];
    const int nb = c.lengths.back();
    const double la = lowers[lowers.size() - 2];
    const double lb = lowers.back();
    const double rel = la > 0.0 ? std::abs(lb - la) / la
                                : std::numeric_limits<double>::infinity();
    out.push_back(make_record(
        s, "lower_bound_rel_change", rel, c.stability_tol,
        rel <= c.stability_tol,
        "frames.frame_bounds; N=" + std::to_string(na) + " vs N=" +
            std::to_string(nb)));
  }

  if (c.sample_count > 0) {
    const frames::FrameSystem& fs = orbit.system;
    const frames::FrameBounds b = frames::frame_bounds(fs);
    SplitMix64 rng(c.sample_seed);
    int violations = 0;
    for (int t = 0; t < c.sample_count; ++t) {
      const numerics::ComplexVector f =
          random_unit_vector(rng, fs.ambient_dim());
      const double energy = (fs.synthesis.adjoint() * f).squaredNorm();
      if (energy < b.lower * (1.0 - 1e-10) - 1e-300 ||
          energy > b.upper * (1.0 + 1e-10))
        ++violations;
    }
    out.push_back(make_record(
        s, "frame_inequality_violations", violations, 0.0, violations == 0,
        "frames.frame_bounds; samples=" + std::to_string(c.sample_count),
        std::to_string(c.sample_seed)));
  }

  const frames::ExcessReport excess =
      frames::excess_test(orbit.system.prefix(c.excess_length));
  const double worst =
      *std::min_element(excess.min_ratio.begin(), excess.min_ratio.end());
  out.push_back(make_record(
      s, "excess_min_deletion_ratio_N" + std::to_string(c.excess_length), worst,
      frames::kExcessTol, excess.all_deletions_survive,
      "frames.excess_test; all single deletions must stay complete"));

  if (!c.plot_path.empty()) write_plot_data(c.plot_path, plot);
}

// ---------------------------------------------------------------------------
// boundedness-probe

struct ProbeConfig {
  json system;
  std::string type;  // "orbit" or "planted-line"
  int length;
  int finer_length;  // 0: no finer system
  std::string expect;
};

ProbeConfig parse_probe(const json& p) {
  if (!p.contains("system") || !p["system"].is_object())
    fail("boundedness-probe requires a 'system' object");
  ProbeConfig c;
  c.system = p["system"];
  c.type = c.system.value("type", "orbit");
  if (c.type != "orbit" && c.type != "planted-line")
    fail("system.type must be 'orbit' or 'planted-line'");
  c.length = need_int(c.system, "length", 64, 2);
  c.finer_length = need_int(c.system, "finer_length",
                            c.type == "orbit" ? 2 * c.length : 0, 0);
  if (c.finer_length != 0 && c.finer_length <= c.length)
    fail("finer_length must exceed length (or be 0)");
  parse_orbit(c.system, std::max(c.length, c.finer_length));  // shape check
  c.expect = p.value("expect", "");
  if (!c.expect.empty() && c.expect != "bounded-consistent" &&
      c.expect != "unbounded-suspect" && c.expect != "inconclusive")
    fail("expect must be bounded-consistent, unbounded-suspect or inconclusive");
  return c;
}

frames::FrameSystem planted_line_system(const frames::OrbitSpec& spec) {
  // Spanning set f_0..f_{K-1} preceded by -f_0: the synthesis kernel is
  // exactly the line through e_0 + e_1, which no shift keeps in place.
  const frames::OrbitFrame orbit = frames::build_orbit_frame(spec);
  const Eigen::Index k = static_cast<Eigen::Index>(spec.eigenvalues.size());
  numerics::ComplexMatrix synth(k, k + 1);
  synth.col(0) = orbit.system.vector(0);
  synth.col(1) = -orbit.system.vector(0);
  for (Eigen::Index j = 1; j < k; ++j)
    synth.col(j + 1) = orbit.system.vector(j);
  return frames::FrameSystem::from_matrix(std::move(synth));
}

void execute_probe(const Scenario& s, const ProbeConfig& c,
                   std::vector<ReportRecord>& out) {
  frames::BoundednessReport report;
  if (c.type == "orbit") {
    const frames::OrbitSpec coarse_spec = parse_orbit(c.system, c.length);
    const frames::OrbitFrame coarse = frames::build_orbit_frame(coarse_spec);
    if (c.finer_length > 0) {
      const frames::OrbitSpec fine_spec = parse_orbit(c.system, c.finer_length);
      const frames::OrbitFrame fine = frames::build_orbit_frame(fine_spec);
      report = frames::boundedness_probe(coarse.system, &fine.system);
    } else {
      report = frames::boundedness_probe(coarse.system);
    }
  } else {
    const frames::OrbitSpec spec =
        parse_orbit(c.system, static_cast<Eigen::Index>(
                                  parse_eigenvalues(c.system).size()));
    report = frames::boundedness_probe(planted_line_system(spec));
  }

  out.push_back(make_record(s, "kernel_dimension",
                            static_cast<double>(report.kernel_dimension), 0.0,
                            true, "frames.kernel; informational"));
  out.push_back(make_record(
      s, "kernel_invariance_residual", report.kernel_invariance_residual, 0.0,
      true,
      "frames.boundedness_probe; informational; raw=" +
          format_value(report.raw_kernel_residual)));
  out.push_back(make_record(s, "operator_norm_estimate",
                            report.operator_norm_estimate, 0.0, true,
                            "frames.recover_operator; ls-consecutive-fit; "
                            "informational"));
  out.push_back(make_record(s, "operator_norm_growth", report.norm_growth, 0.0,
                            true, "frames.boundedness_probe; informational"));

  double encoded = 0.0;
  if (report.verdict == frames::Verdict::kBoundedConsistent) encoded = 1.0;
  if (report.verdict == frames::Verdict::kUnboundedSuspect) encoded = -1.0;
  std::string verdict_name = frames::to_string(report.verdict);
  std::string lowered = verdict_name;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  const bool pass = c.expect.empty() || lowered == c.expect;
  out.push_back(make_record(s, "verdict", encoded, 0.0, pass,
                            "frames.boundedness_probe; verdict=" + verdict_name +
                                (report.note.empty() ? "" : "; " + report.note)));
}

// ---------------------------------------------------------------------------
// riesz-exhaustive

struct RieszConfig {
  frames::FrameSystem system;
  std::uint64_t max_subsets;
  std::uint64_t seed;
  bool has_expected = false;
  double expected_lower = 0.0;
  double expected_upper = 0.0;
  double match_tol;
};

RieszConfig parse_riesz(const json& p) {
  std::vector<numerics::ComplexVector> vectors;
  if (p.contains("vectors")) {
    if (!p["vectors"].is_array() || p["vectors"].empty())
      fail("vectors must be a nonempty array");
    for (const json& vec : p["vectors"]) {
      const std::vector<Complex> entries = parse_complex_list(vec, "vectors");
      numerics::ComplexVector v(static_cast<Eigen::Index>(entries.size()));
      for (std::size_t i = 0; i < entries.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = entries[i];
      vectors.push_back(std::move(v));
    }
  } else if (p.contains("preset")) {
    const json& preset = p["preset"];
    const std::string name = preset.value("name", "");
    const int dim = preset.value("dim", 3);
    if (dim < 1) fail("preset.dim must be >= 1");
    if (name == "orthonormal") {
      for (int i = 0; i < dim; ++i) {
        numerics::ComplexVector v = numerics::ComplexVector::Zero(dim);
        v(i) = 1.0;
        vectors.push_back(std::move(v));
      }
    } else if (name == "doubled-basis") {
      numerics::ComplexVector e0 = numerics::ComplexVector::Zero(dim);
      e0(0) = 1.0;
      vectors.push_back(e0);
      for (int i = 0; i < dim; ++i) {
        numerics::ComplexVector v = numerics::ComplexVector::Zero(dim);
        v(i) = 1.0;
        vectors.push_back(std::move(v));
      }
    } else {
      fail("preset.name must be 'orthonormal' or 'doubled-basis'");
    }
  } else {
    fail("riesz-exhaustive requires 'vectors' or 'preset'");
  }

  RieszConfig c{frames::FrameSystem::from_vectors(vectors),
                p.value("max_subsets", std::uint64_t{0}),
                p.value("seed", std::uint64_t{0}),
                false,
                0.0,
                0.0,
                need_positive(p, "match_tol", 1e-9)};
  if (c.system.count() > 20 && c.max_subsets == 0)
    fail("more than 20 vectors requires sampled mode (set max_subsets)");
  if (p.contains("expected_lower") != p.contains("expected_upper"))
    fail("expected_lower and expected_upper must be given together");
  if (p.contains("expected_lower")) {
    c.has_expected = true;
    c.expected_lower = p["expected_lower"].get<double>();
    c.expected_upper = p["expected_upper"].get<double>();
  }
  return c;
}

void execute_riesz(const Scenario& s, const RieszConfig& c,
                   std::vector<ReportRecord>& out) {
  const frames::RieszFrameReport rep =
      frames::riesz_frame_check(c.system, c.max_subsets, c.seed);
  const std::string seed_label =
      rep.exhaustive ? "deterministic" : std::to_string(c.seed);

  const bool lower_ok =
      !c.has_expected ||
      std::abs(rep.uniform.lower - c.expected_lower) <= c.match_tol;
  const bool upper_ok =
      !c.has_expected ||
      std::abs(rep.uniform.upper - c.expected_upper) <= c.match_tol;
  out.push_back(make_record(
      s, "uniform_lower_bound", rep.uniform.lower,
      c.has_expected ? c.match_tol : 0.0, lower_ok,
      "frames.riesz_frame_check; witness=" + indices_to_string(rep.lower_witness),
      seed_label));
  out.push_back(make_record(
      s, "uniform_upper_bound", rep.uniform.upper,
      c.has_expected ? c.match_tol : 0.0, upper_ok,
      "frames.riesz_frame_check; witness=" + indices_to_string(rep.upper_witness),
      seed_label));
  out.push_back(make_record(
      s, "subsets_checked", static_cast<double>(rep.subsets_checked), 0.0, true,
      "frames.riesz_frame_check; coverage=" + format_value(rep.coverage),
      seed_label));
}

// ---------------------------------------------------------------------------
// model-space

struct ModelSpaceConfig {
  hardy::BlaschkeSpec spec;
  int truncation;
};

ModelSpaceConfig parse_model_space(const json& p) {
  ModelSpaceConfig c;
  c.spec = parse_blaschke(p);
  c.truncation = need_truncation(p, 256);
  return c;
}

void execute_model_space(const Scenario& s, const ModelSpaceConfig& c,
                         std::vector<ReportRecord>& out) {
  const int dim = hardy::model_space_dimension(c.spec, c.truncation);
  const int expected = c.spec.degree();
  out.push_back(make_record(
      s, "model_space_dimension", dim, 0.0, dim == expected,
      "hardy.model_space_dimension; expected=" + std::to_string(expected)));
}

// ---------------------------------------------------------------------------

using Executor = std::function<void(const Scenario&, std::vector<ReportRecord>&)>;

/// Parses (throwing ConfigError on schema violations) and returns the
/// execution closure, so that a batch can validate everything up front.
Executor prepare(const Scenario& s) {
  if (std::find(kScenarioKinds.begin(), kScenarioKinds.end(), s.kind) ==
      kScenarioKinds.end())
    fail("unknown scenario kind '" + s.kind + "'");
  if (!s.parameters.is_object())
    fail("scenario parameters must be an object");

  if (s.kind == "blaschke-certify") {
    auto c = parse_certify(s.parameters);
    return [c](const Scenario& sc, std::vector<ReportRecord>& out) {
      execute_certify(sc, c, out);
    };
  }
  if (s.kind == "beurling-roundtrip") {
    auto c = parse_roundtrip(s.parameters);
    return [c](const Scenario& sc, std::vector<ReportRecord>& out) {
      execute_roundtrip(sc, c, out);
    };
  }
  if (s.kind == "orbit-frame") {
    auto c = parse_orbit_config(s.parameters);
    return [c](const Scenario& sc, std::vector<ReportRecord>& out) {
      execute_orbit(sc, c, out);
    };
  }
  if (s.kind == "boundedness-probe") {
    auto c = parse_probe(s.parameters);
    return [c](const Scenario& sc, std::vector<ReportRecord>& out) {
      execute_probe(sc, c, out);
    };
  }
  if (s.kind == "riesz-exhaustive") {
    auto c = std::make_shared<RieszConfig>(parse_riesz(s.parameters));
    return [c](const Scenario& sc, std::vector<ReportRecord>& out) {
      execute_riesz(sc, *c, out);
    };
  }
  auto c = parse_model_space(s.parameters);
  return [c](const Scenario& sc, std::vector<ReportRecord>& out) {
    execute_model_space(sc, c, out);
  };
}

std::vector<ReportRecord> run_prepared(const Scenario& s, const Executor& exec) {
  std::vector<ReportRecord> records;
  try {
    exec(s, records);
  } catch (const std::exception& e) {
    // Numerical failure inside the pipeline: a failed record, not an abort.
    records.push_back(
        make_record(s, "scenario_error", 0.0, 0.0, false, e.what()));
  }
  return records;
}

}  // namespace

std::vector<ReportRecord> run_scenario(const Scenario& s) {
  return run_prepared(s, prepare(s));
}

BatchOutcome run_batch(const nlohmann::json& config) {
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  if (config.value("spec_version", "") != "1")
    throw ConfigError("config spec_version must be \"1\"");
  if (!config.contains("scenarios") || !config["scenarios"].is_array())
    throw ConfigError("config must contain a 'scenarios' array");

  std::vector<Scenario> scenarios;
  std::vector<Executor> executors;
  std::vector<ReportFormat> formats;
  int index = 0;
  for (const nlohmann::json& entry : config["scenarios"]) {
    if (!entry.is_object()) throw ConfigError("scenario entries must be objects");
    Scenario s;
    s.kind = entry.value("kind", "");
    s.name = entry.value("name", s.kind + "-" + std::to_string(index));
    s.parameters = entry.value("parameters", nlohmann::json::object());
    s.output_path = entry.value("output_path", s.name + ".csv");
    ReportFormat format;
    if (entry.contains("format"))
      format = format_from_name(entry["format"].get<std::string>());
    else
      format = s.output_path.size() >= 5 &&
                       s.output_path.substr(s.output_path.size() - 5) == ".json"
                   ? ReportFormat::kJson
                   : ReportFormat::kCsv;
    executors.push_back(prepare(s));  // schema-validate before any computation
    scenarios.push_back(std::move(s));
    formats.push_back(format);
    ++index;
  }

  BatchOutcome outcome;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const std::vector<ReportRecord> records =
        run_prepared(scenarios[i], executors[i]);
    emit_report(records, scenarios[i].output_path, formats[i]);
    ++outcome.scenarios;
    outcome.records += static_cast<int>(records.size());
    for (const ReportRecord& r : records)
      if (!r.pass) ++outcome.failed_records;
  }
  return outcome;
}

BatchOutcome run_batch_file(const std::string& config_path) {
  std::ifstream file(config_path);
  if (!file)
    throw std::runtime_error("cannot open config file '" + config_path + "'");
  nlohmann::json config;
  try {
    file >> config;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config parse error: " + std::string(e.what()));
  }
  return run_batch(config);
}

int exit_code(const BatchOutcome& outcome) {
  return outcome.failed_records > 0 ? 1 : 0;
}

}  // namespace frameforge::cli
