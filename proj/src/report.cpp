#include "frameforge/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace frameforge::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string render_report(const std::vector<ReportRecord>& records,
                          ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::kCsv) {
    out << "scenario,metric,value,tolerance,pass,seed,note\n";
    for (const ReportRecord& r : records) {
      out << csv_field(r.scenario) << ',' << csv_field(r.metric) << ','
          << format_value(r.value) << ',' << format_value(r.tolerance) << ','
          << (r.pass ? "true" : "false") << ',' << csv_field(r.seed) << ','
          << csv_field(r.note) << '\n';
    }
    return out.str();
  }
  if (records.empty()) return "[]\n";
  out << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ReportRecord& r = records[i];
    out << "  {\"scenario\":" << json_string(r.scenario)
        << ",\"metric\":" << json_string(r.metric)
        << ",\"value\":" << format_value(r.value)
        << ",\"tolerance\":" << format_value(r.tolerance)
        << ",\"pass\":" << (r.pass ? "true" : "false")
        << ",\"seed\":" << json_string(r.seed)
        << ",\"note\":" << json_string(r.note) << '}'
        << (i + 1 < records.size() ? "," : "") << '\n';
  }
  out << "]\n";
  return out.str();
}

void emit_report(const std::vector<ReportRecord>& records,
                 const std::string& path, ReportFormat format) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw std::runtime_error("emit_report: cannot open '" + path +
                             "' for writing");
  file << render_report(records, format);
  if (!file)
    throw std::runtime_error("emit_report: write to '" + path + "' failed");
}

ReportFormat format_from_name(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw std::runtime_error("unknown report format '" + name +
                           "' (expected csv or json)");
}

}  // namespace frameforge::cli
