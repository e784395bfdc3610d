#pragma once

// Command dispatch for the `hint` tool. The run_* functions take an output
// stream and return the process exit code, so tests can drive them directly.

#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "hint/oracle.hpp"

namespace hint {

enum ExitCode : int {
  kExitOk = 0,
  kExitLawViolation = 1,
  kExitParse = 2,
  kExitUnsupported = 3,
  kExitUndefinedSum = 4,
  kExitGoldenMismatch = 5,
};

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;  // eval: space, function; defi: scenario
  std::string name;                 // defi kind or demo name
  std::string suite = "all";        // laws: algebra | integral | all
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  bool json = false;
  bool certificate = false;
};

int run_eval(const RunConfig& cfg, std::ostream& out);
int run_laws(const RunConfig& cfg, const Hooks& hooks, std::ostream& out);
int run_defi(const RunConfig& cfg, std::ostream& out);
int run_demo(const RunConfig& cfg, std::ostream& out);

/// Maps a library exception to its exit code and writes the message.
int report_error(std::exception_ptr e, std::ostream& err);

/// Parses argv and dispatches; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hint
