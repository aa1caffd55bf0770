#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "charquant/complexes.hpp"

namespace charquant {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { table, json };

struct RunConfig {
  std::string command;
  std::vector<int> primes;
  TruncationParams truncation;  // M = 0 means 2p for each p
  int samples = 100;
  unsigned long long seed = 42;
  OutputFormat format = OutputFormat::table;
  std::string output_path;  // empty: standard output
  /// Command-specific settings echoed into the report (e.g. coefficients).
  std::vector<std::pair<std::string, std::string>> extra;
};

struct ReportDocument {
  RunConfig config;
  std::vector<VerificationReport> reports;
  bool verdict() const;
};

std::string render_json(const ReportDocument& doc);
std::string render_table(const ReportDocument& doc);

/// Parses argv, runs the requested suites and writes the report.
/// Returns 0 if every check passes, 1 if any fails, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charquant
