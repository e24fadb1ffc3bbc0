#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "prepcode/verify.hpp"

namespace prepcode::cli {

inline constexpr const char* kToolName = "prepcode";
inline constexpr const char* kVersion = "1.0.0";

/// Exit codes: 0 success / all checks pass, 1 a check failed or nothing was
/// found, 2 usage, parse or I/O error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Ordered collection of check reports plus provenance.
struct SuiteReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::array();
  std::vector<verify::CheckReport> checks;
  double timing_ms = 0.0;

  bool pass() const;
  void add_input(const std::string& path);
  nlohmann::json to_json() const;
};

/// FNV-1a 64 of a file's bytes, as 16 lowercase hex digits.
std::string file_digest(const std::string& path);

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prepcode::cli
