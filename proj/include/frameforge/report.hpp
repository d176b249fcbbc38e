#pragma once

#include <string>
#include <vector>

namespace frameforge::cli {

struct ReportRecord {
  std::string scenario;
  std::string metric;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string seed = "deterministic";
  std::string note;  // provenance: which operation produced the value
};

enum class ReportFormat { kCsv, kJson };

/// 17 significant digits, the serialization used in every report.
std::string format_value(double v);

/// CSV columns: scenario, metric, value, tolerance, pass, seed, note.
/// JSON is an array of records with the same fields. Output is byte-stable:
/// rerunning the same records reproduces the file exactly.
void emit_report(const std::vector<ReportRecord>& records,
                 const std::string& path, ReportFormat format);

std::string render_report(const std::vector<ReportRecord>& records,
                          ReportFormat format);

ReportFormat format_from_name(const std::string& name);

}  // namespace frameforge::cli
