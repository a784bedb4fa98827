#pragma once

// Report generation for the command-line front end. Every command renders a
// deterministic report and an exit status:
//   0 success / feasible, 1 negative verdict, 2 input error, 3 cap exceeded.

#include <cstdint>
#include <string>

#include "lpinterp/format.hpp"

namespace lpinterp {

enum class OutputFormat { text, machine };

struct CommandOptions {
  std::uint64_t cap = 1'000'000;
  std::uint64_t seed = 20100101;
  std::uint64_t samples = 1000;
  unsigned arity = 0;  // for `check`; 0 means "take it from the problem file", else 1
  OutputFormat format = OutputFormat::text;
};

enum ExitStatus : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitInputError = 2,
  kExitCapExceeded = 3,
};

struct Report {
  int status = kExitOk;
  std::string output;
};

Report cmd_solve(const ProblemFile& problem, const CommandOptions& options);
Report cmd_enumerate(const ProblemFile& problem, const CommandOptions& options);
Report cmd_oracle(const ProblemFile& problem, const CommandOptions& options);
Report cmd_goodstein(const ProblemFile& problem, const CommandOptions& options);
Report cmd_rg(const ProblemFile& problem, const CommandOptions& options);
Report cmd_eval(const ProblemFile& problem, const CommandOptions& options);
// Seeded random cross-check of the solver against the oracle on the
// problem's lattice.
Report cmd_check(const ProblemFile& problem, const CommandOptions& options);
// Problem file text built from a utility boundary file.
Report cmd_from_utility(const UtilityBoundaryFile& file, const CommandOptions& options);

}  // namespace lpinterp
