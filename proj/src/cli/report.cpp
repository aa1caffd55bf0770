#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "charquant/cli.hpp"

namespace charquant {

bool ReportDocument::verdict() const {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

namespace {

using nlohmann::ordered_json;

ordered_json degrees_json(const std::vector<HomologySummary>& summaries) {
  ordered_json out = ordered_json::array();
  for (const auto& s : summaries) {
    ordered_json torsion = ordered_json::array();
    for (const auto& f : s.torsion) torsion.push_back(f.coefficient_string());
    out.push_back({{"degree", s.degree}, {"free_rank", s.free_rank}, {"torsion", torsion}});
  }
  return out;
}

std::string format_name(OutputFormat f) { return f == OutputFormat::json ? "json" : "table"; }

}  // namespace

std::string render_json(const ReportDocument& doc) {
  const RunConfig& c = doc.config;
  ordered_json config;
  config["command"] = c.command;
  config["p"] = c.primes;
  config["max_degree"] = c.truncation.N;
  if (c.truncation.M > 0)
    config["max_order"] = c.truncation.M;
  else
    config["max_order"] = "2p";
  config["samples"] = c.samples;
  config["seed"] = c.seed;
  config["format"] = format_name(c.format);
  for (const auto& [k, v] : c.extra) config[k] = v;

  ordered_json reports = ordered_json::array();
  for (const auto& r : doc.reports) {
    ordered_json checks = ordered_json::array(), observations = ordered_json::array();
    for (const auto& ch : r.checks) {
      if (ch.informational)
        observations.push_back({{"name", ch.name}, {"holds", ch.pass}});
      else
        checks.push_back({{"name", ch.name}, {"pass", ch.pass}});
    }
    reports.push_back({{"suite", r.suite},
                       {"p", r.p},
                       {"degrees", degrees_json(r.summaries)},
                       {"checks", checks},
                       {"observations", observations},
                       {"notes", r.notes}});
  }
  ordered_json doc_json;
  doc_json["schema_version"] = kSchemaVersion;
  doc_json["tool_version"] = kToolVersion;
  doc_json["config"] = config;
  doc_json["reports"] = reports;
  doc_json["verdict"] = doc.verdict();
  return doc_json.dump(2) + "\n";
}

std::string render_table(const ReportDocument& doc) {
  std::ostringstream os;
  for (const auto& r : doc.reports) {
    os << "== " << r.suite << " (p = " << r.p << ") ==\n";
    if (!r.summaries.empty()) {
      os << "  " << std::left << std::setw(8) << "degree" << std::setw(11) << "free_rank" << "torsion\n";
      for (const auto& s : r.summaries) {
        std::string torsion;
        for (const auto& f : s.torsion) torsion += (torsion.empty() ? "" : ", ") + f.coefficient_string();
        os << "  " << std::left << std::setw(8) << ("H^" + std::to_string(s.degree)) << std::setw(11)
           << s.free_rank << (torsion.empty() ? "-" : torsion) << "\n";
      }
    }
    for (const auto& ch : r.checks)
      os << "  " << (ch.informational ? (ch.pass ? "holds " : "fails ") : (ch.pass ? "PASS  " : "FAIL  ")) << ch.name
         << (ch.informational ? "  (informational)" : "") << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    os << "\n";
  }
  os << "verdict: " << (doc.verdict() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace charquant
