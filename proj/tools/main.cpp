#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "opcalc/cli/commands.hpp"
#include "opcalc/errors.hpp"

namespace {

void emit_error(const char* kind, const std::string& message) {
  nlohmann::json doc;
  doc["error"]["kind"] = kind;
  doc["error"]["message"] = message;
  std::cerr << doc.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operational-calculus solver for constant-coefficient ODEs"};
  app.require_subcommand(1);

  const std::map<std::string, std::pair<opcalc::cli::Command, const char*>> kinds{
      {"expand",
       {opcalc::cli::Command::Expand,
        "Print the Laurent expansion of 1/f (or s*r/f with initial values) as JSON"}},
      {"homogeneous",
       {opcalc::cli::Command::Homogeneous,
        "Write the solution basis of f(D) xi = 0 sampled on the grid as CSV"}},
      {"solve",
       {opcalc::cli::Command::Solve,
        "Write a solution of f(D) xi = forcing as CSV, with an RK4 oracle "
        "column when initial values are given"}},
      {"verify",
       {opcalc::cli::Command::Verify,
        "Check the solution against the equation; exit 0 iff all checks pass"}},
  };

  std::string spec_path, out_path;
  int grid = 0;
  double tol = 0.0;
  for (const auto& [name, kind] : kinds) {
    CLI::App* sub = app.add_subcommand(name, kind.second);
    sub->add_option("--spec", spec_path, "Problem document (JSON)")->required();
    sub->add_option("--out", out_path, "Output path ('-' for stdout)");
    sub->add_option("--grid", grid, "Sample-grid size override")->check(CLI::Range(2, 1 << 20));
    sub->add_option("--tol", tol, "Residual and oracle tolerance override")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const opcalc::cli::Command command = kinds.at(sub->get_name()).first;

  try {
    opcalc::cli::ProblemSpec spec = opcalc::cli::load_problem_spec(spec_path);
    if (sub->count("--grid") > 0) spec.grid_points = grid;
    if (sub->count("--tol") > 0) {
      spec.tolerances.residual = tol;
      spec.tolerances.oracle = tol;
    }
    if (sub->count("--out") > 0) spec.output = out_path;

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!spec.output.empty() && spec.output != "-") {
      file.open(spec.output);
      if (!file) throw opcalc::SchemaError("cannot open output file: " + spec.output);
      out = &file;
    }
    return opcalc::cli::run_command(command, spec, *out, std::cerr);
  } catch (const opcalc::SchemaError& e) {
    emit_error(e.kind(), e.what());
    return 2;
  } catch (const opcalc::ExpressionError& e) {
    emit_error(e.kind(), e.what());
    return 2;
  } catch (const opcalc::Error& e) {
    emit_error(e.kind(), e.what());
    return 3;
  } catch (const std::exception& e) {
    emit_error("InternalError", e.what());
    return 3;
  }
}
