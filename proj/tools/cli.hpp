#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace biharm::cli {

enum class Format { Json, Csv };

struct JobConfig {
  std::string command;  // basis-check | table | eval | components | reconstruct | verify
  std::string input;    // empty: verify uses defaults, other commands require it
  std::string output;   // empty: stdout
  Format format = Format::Json;
  double tolerance = 1e-10;
  std::optional<std::string> grid;  // "x0,y0,x1,y1,n"
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitSchemaError = 2;

/// Runs one job. Reports go to `out` (or config.output); a single
/// "error: kind=<Kind> reason=<text>" line goes to `err` on failure.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches to run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace biharm::cli
