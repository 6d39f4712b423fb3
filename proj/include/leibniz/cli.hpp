#pragma once

#include <string>
#include <utility>
#include <vector>

namespace leibniz::cli {

enum ExitCode { verified = 0, refuted = 1, input_error = 2 };

struct Report {
  std::vector<std::string> command;
  std::vector<std::pair<std::string, std::string>> verdicts;  // in emission order
  std::vector<std::string> artifacts;                          // files written
  std::string text;                                            // human-readable output
  std::string error;
  int exit_code = verified;
  bool structured = false;  // --format structured was requested
};

/// Runs one subcommand; args excludes the program name. Never throws for
/// bad input: usage and parse errors come back as exit code 2.
Report run(const std::vector<std::string>& args);

/// JSON rendering of the report for --format structured.
std::string render_structured(const Report& report);

}  // namespace leibniz::cli
