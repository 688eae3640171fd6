#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opcalc/interval.hpp"
#include "opcalc/operator_polynomial.hpp"
#include "opcalc/tolerances.hpp"

#include "json.hpp"

namespace opcalc::cli {

struct Tolerances {
  double residual = tol::kResidual;  // class-equality residual checks
  double interpolation = 1e-13;      // forcing interpolation target
  double oracle = 1e-6;              // allowed deviation from the RK4 oracle
};

enum class ForcingKind { None, Expression, Samples };

// Parsed problem document. Complex numbers in the document are [re, im]
// pairs (bare numbers are accepted as real).
struct ProblemSpec {
  OperatorPolynomial op;
  ForcingKind forcing_kind = ForcingKind::None;
  std::string forcing_text;  // expression source or samples file path
  Interval interval{-1.0, 1.0};
  std::optional<std::vector<Complex>> initial_values;
  Tolerances tolerances;
  std::string output;     // CSV/JSON destination; empty or "-" means stdout
  int grid_points = 201;
};

// Validates and converts a JSON document. Throws SchemaError with the
// offending field path; forcing expressions are compiled eagerly so bad
// ones throw ExpressionError here.
ProblemSpec parse_problem_spec(const nlohmann::json& document);

// Reads and parses a spec file. File and JSON errors become SchemaError.
ProblemSpec load_problem_spec(const std::string& path);

}  // namespace opcalc::cli
