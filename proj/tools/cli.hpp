#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "synclab/gates.hpp"
#include "synclab/sweep.hpp"

namespace synclab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kScopeCapped = 2,
  kBoundViolation = 3,
};

enum class OutputFormat { text, json };

struct RunConfig {
  /// analyze, rt, word, at, msc, pi, reach, witness, primitive, monoid,
  /// family, bounds, sweep.
  std::string command;
  /// For `monoid` (stats, rt, thm17), `family` (cerny, rn) and `sweep`.
  std::string subcommand;
  /// Automaton file; empty or "-" reads standard input.
  std::string input;
  /// Use a built-in family instead of a file.
  std::optional<std::string> family;
  std::optional<std::size_t> n;
  /// `witness --target`, e.g. "1,3" or "{1,3}".
  std::string target;
  OutputFormat format = OutputFormat::text;
  Gates gates;
  std::size_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
};

/// Executes one command. Diagnostics go to `err`; the report to `out`.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace synclab::cli
