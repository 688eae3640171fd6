#pragma once

#include <iosfwd>

#include "opcalc/cli/problem_spec.hpp"

namespace opcalc::cli {

enum class Command { Expand, Homogeneous, Solve, Verify };

// Runs one command. `out` receives the payload (CSV or JSON), `diag`
// receives the machine-readable run summary. Returns the process exit code
// (0 ok, 1 verification failure); input and numeric errors are thrown as
// SchemaError / ExpressionError / Error for the caller to map.
int run_command(Command command, const ProblemSpec& spec, std::ostream& out,
                std::ostream& diag);

}  // namespace opcalc::cli
