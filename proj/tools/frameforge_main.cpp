#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frameforge/report.hpp"
#include "frameforge/scenario.hpp"

namespace {

using json = nlohmann::json;

// Accepts "0.5", "-0.3i", "0.2+0.2i", "1-0.7i".
std::complex<double> parse_complex_token(const std::string& token) {
  const std::string t = token;
  if (t.empty()) throw CLI::ValidationError("empty complex literal");
  if (t.back() == 'i' || t.back() == 'j') {
    std::string body = t.substr(0, t.size() - 1);
    // Split an optional real part from the imaginary coefficient.
    for (std::size_t pos = body.size(); pos-- > 1;) {
      if ((body[pos] == '+' || body[pos] == '-') && body[pos - 1] != 'e' &&
          body[pos - 1] != 'E') {
        const double re = std::stod(body.substr(0, pos));
        std::string imag = body.substr(pos);
        if (imag == "+") imag = "1";
        if (imag == "-") imag = "-1";
        return {re, std::stod(imag)};
      }
    }
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, std::stod(body)};
  }
  return {std::stod(t), 0.0};
}

json complex_list_to_json(const std::vector<std::string>& tokens) {
  json out = json::array();
  for (const std::string& t : tokens) {
    const std::complex<double> z = parse_complex_token(t);
    out.push_back(json::array({z.real(), z.imag()}));
  }
  return out;
}

int run_and_report(const frameforge::cli::Scenario& scenario,
                   const std::string& format_name) {
  using namespace frameforge::cli;
  const std::vector<ReportRecord> records = run_scenario(scenario);
  emit_report(records, scenario.output_path, format_from_name(format_name));

  int failed = 0;
  for (const ReportRecord& r : records) {
    if (!r.pass) ++failed;
    std::printf("%-6s %s = %s", r.pass ? "[ok]" : "[FAIL]", r.metric.c_str(),
                format_value(r.value).c_str());
    if (r.tolerance != 0.0)
      std::printf("  (tolerance %s)", format_value(r.tolerance).c_str());
    std::printf("\n");
  }
  std::printf("%d record(s), %d failed -> %s\n",
              static_cast<int>(records.size()), failed,
              scenario.output_path.c_str());
  return failed > 0 ? 1 : 0;
}

struct CommonArgs {
  std::string out;
  std::string format = "csv";
  int truncation = 256;
  std::string plot_path;
};

void add_common(CLI::App* cmd, CommonArgs& args, const std::string& default_out) {
  args.out = default_out;
  cmd->add_option("--out", args.out, "report file path");
  cmd->add_option("--format", args.format, "report format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--truncation", args.truncation,
                  "series truncation length (>= 16)");
  cmd->add_option("--emit-plot-data", args.plot_path,
                  "write two-column plot data to this path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "frame-forge: numerical laboratory for operator-orbit frames, "
      "shift-invariant subspaces and Blaschke-generated inner functions"};
  app.require_subcommand(1);

  // certify ------------------------------------------------------------
  auto* certify = app.add_subcommand(
      "certify", "certify a Blaschke product as inner by boundary sweep");
  CommonArgs certify_args;
  std::vector<std::string> certify_zeros;
  int certify_samples = 1024;
  int certify_power = 0;
  double certify_tol = 1e-6;
  double certify_radius = 1.0;
  certify->add_option("--zeros", certify_zeros, "disk zeros, e.g. 0.5 -0.3i")
      ->delimiter(',');
  certify->add_option("--r", certify_power, "monomial power");
  certify->add_option("--samples", certify_samples, "boundary samples (>= 64)");
  certify->add_option("--tol", certify_tol, "certification tolerance");
  certify->add_option("--radius", certify_radius, "sweep radius in (0, 1]");
  add_common(certify, certify_args, "certify-report.csv");

  // roundtrip ----------------------------------------------------------
  auto* roundtrip = app.add_subcommand(
      "roundtrip",
      "cyclic span of an inner generator, wandering-vector extraction, "
      "overlap check");
  CommonArgs roundtrip_args;
  std::vector<std::string> roundtrip_zeros;
  int roundtrip_power = 0;
  int roundtrip_depth = 0;
  double roundtrip_overlap_tol = 1e-6;
  roundtrip->add_option("--zeros", roundtrip_zeros, "disk zeros")->delimiter(',');
  roundtrip->add_option("--r", roundtrip_power, "monomial power");
  roundtrip->add_option("--depth", roundtrip_depth,
                        "iterate depth (default truncation/2)");
  roundtrip->add_option("--tol", roundtrip_overlap_tol, "overlap tolerance");
  add_common(roundtrip, roundtrip_args, "roundtrip-report.csv");

  // orbit ----------------------------------------------------------------
  auto* orbit = app.add_subcommand(
      "orbit", "diagonal-model operator orbit: separation, frame bounds, excess");
  CommonArgs orbit_args;
  std::vector<std::string> orbit_eigs;
  double orbit_base = 2.0;
  int orbit_count = 8;
  std::vector<int> orbit_lengths = {64, 128, 256};
  std::uint64_t orbit_seed = 0;
  double orbit_sep_min = 0.1;
  orbit->add_option("--eigenvalues", orbit_eigs,
                    "explicit eigenvalues inside the disk")
      ->delimiter(',');
  orbit->add_option("--base", orbit_base,
                    "exponential schedule base (eigenvalues 1 - base^-(k+1))");
  orbit->add_option("--count", orbit_count, "eigenvalue count for the schedule");
  orbit->add_option("--lengths", orbit_lengths, "orbit truncation lengths")
      ->delimiter(',');
  orbit->add_option("--seed", orbit_seed, "sampling seed");
  orbit->add_option("--separation-min", orbit_sep_min,
                    "required separation constant");
  add_common(orbit, orbit_args, "orbit-report.csv");

  // probe ----------------------------------------------------------------
  auto* probe = app.add_subcommand(
      "probe", "boundedness dichotomy probe on an orbit or a planted system");
  CommonArgs probe_args;
  std::vector<std::string> probe_eigs;
  double probe_base = 2.0;
  int probe_count = 8;
  int probe_length = 64;
  std::string probe_type = "orbit";
  std::string probe_expect;
  probe->add_option("--type", probe_type, "orbit or planted-line")
      ->check(CLI::IsMember({"orbit", "planted-line"}));
  probe->add_option("--eigenvalues", probe_eigs, "explicit eigenvalues")
      ->delimiter(',');
  probe->add_option("--base", probe_base, "exponential schedule base");
  probe->add_option("--count", probe_count, "eigenvalue count");
  probe->add_option("--length", probe_length, "orbit length");
  probe->add_option("--expect", probe_expect,
                    "expected verdict (bounded-consistent, unbounded-suspect, "
                    "inconclusive)");
  add_common(probe, probe_args, "probe-report.csv");

  // riesz ----------------------------------------------------------------
  auto* riesz = app.add_subcommand(
      "riesz", "exhaustive subfamily frame-bound check (uniform bounds)");
  CommonArgs riesz_args;
  std::string riesz_preset = "doubled-basis";
  int riesz_dim = 3;
  std::uint64_t riesz_max_subsets = 0;
  std::uint64_t riesz_seed = 0;
  riesz->add_option("--preset", riesz_preset, "orthonormal or doubled-basis")
      ->check(CLI::IsMember({"orthonormal", "doubled-basis"}));
  riesz->add_option("--dim", riesz_dim, "ambient dimension");
  riesz->add_option("--max-subsets", riesz_max_subsets,
                    "sampled mode subset count (0 = exhaustive)");
  riesz->add_option("--seed", riesz_seed, "sampling seed");
  add_common(riesz, riesz_args, "riesz-report.csv");

  // modelspace -------------------------------------------------------------
  auto* modelspace = app.add_subcommand(
      "modelspace", "complement dimension of the shifted-generator span");
  CommonArgs modelspace_args;
  std::vector<std::string> modelspace_zeros;
  int modelspace_power = 0;
  modelspace->add_option("--zeros", modelspace_zeros, "disk zeros")
      ->delimiter(',');
  modelspace->add_option("--r", modelspace_power, "monomial power");
  add_common(modelspace, modelspace_args, "modelspace-report.csv");

  // run ----------------------------------------------------------------
  auto* run = app.add_subcommand("run", "run a batch config (JSON)");
  std::string run_config_path;
  run->add_option("config", run_config_path, "config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    using frameforge::cli::Scenario;

    if (certify->parsed()) {
      json params = {{"zeros", complex_list_to_json(certify_zeros)},
                     {"monomial_power", certify_power},
                     {"truncation", certify_args.truncation},
                     {"samples", certify_samples},
                     {"tol", certify_tol},
                     {"radius", certify_radius}};
      if (!certify_args.plot_path.empty())
        params["plot_path"] = certify_args.plot_path;
      return run_and_report(
          Scenario{"certify", "blaschke-certify", params, certify_args.out},
          certify_args.format);
    }
    if (roundtrip->parsed()) {
      json params = {{"zeros", complex_list_to_json(roundtrip_zeros)},
                     {"monomial_power", roundtrip_power},
                     {"truncation", roundtrip_args.truncation},
                     {"overlap_tol", roundtrip_overlap_tol}};
      if (roundtrip_depth > 0) params["depth"] = roundtrip_depth;
      return run_and_report(
          Scenario{"roundtrip", "beurling-roundtrip", params, roundtrip_args.out},
          roundtrip_args.format);
    }
    if (orbit->parsed()) {
      json params = {{"lengths", orbit_lengths},
                     {"seed", orbit_seed},
                     {"separation_min", orbit_sep_min}};
      if (!orbit_eigs.empty())
        params["eigenvalues"] = complex_list_to_json(orbit_eigs);
      else
        params["schedule"] = {{"base", orbit_base}, {"count", orbit_count}};
      if (!orbit_args.plot_path.empty())
        params["plot_path"] = orbit_args.plot_path;
      return run_and_report(Scenario{"orbit", "orbit-frame", params, orbit_args.out},
                            orbit_args.format);
    }
    if (probe->parsed()) {
      json system = {{"type", probe_type}, {"length", probe_length}};
      if (!probe_eigs.empty())
        system["eigenvalues"] = complex_list_to_json(probe_eigs);
      else
        system["schedule"] = {{"base", probe_base}, {"count", probe_count}};
      json params = {{"system", system}};
      if (!probe_expect.empty()) params["expect"] = probe_expect;
      return run_and_report(
          Scenario{"probe", "boundedness-probe", params, probe_args.out},
          probe_args.format);
    }
    if (riesz->parsed()) {
      json params = {{"preset", {{"name", riesz_preset}, {"dim", riesz_dim}}},
                     {"max_subsets", riesz_max_subsets},
                     {"seed", riesz_seed}};
      return run_and_report(
          Scenario{"riesz", "riesz-exhaustive", params, riesz_args.out},
          riesz_args.format);
    }
    if (modelspace->parsed()) {
      json params = {{"zeros", complex_list_to_json(modelspace_zeros)},
                     {"monomial_power", modelspace_power},
                     {"truncation", modelspace_args.truncation}};
      return run_and_report(
          Scenario{"modelspace", "model-space", params, modelspace_args.out},
          modelspace_args.format);
    }
    if (run->parsed()) {
      const frameforge::cli::BatchOutcome outcome =
          frameforge::cli::run_batch_file(run_config_path);
      std::printf("%d scenario(s), %d record(s), %d failed\n", outcome.scenarios,
                  outcome.records, outcome.failed_records);
      return frameforge::cli::exit_code(outcome);
    }
  } catch (const frameforge::cli::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
