#pragma once

// Verb dispatch behind the `acell` command-line tool.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace acell {

struct Command {
  // One of schur, expand, pair, mult, check, simples.
  std::string verb;
  // Flag name without dashes -> values in the order given.
  std::map<std::string, std::vector<std::string>> options;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

// Runs the command, writing results to `out` and diagnostics to `err`.
// Failed axiom checks are part of the report and still exit 0.
int run_command(const Command& c, std::ostream& out, std::ostream& err);

}  // namespace acell
