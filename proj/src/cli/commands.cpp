#include "opcalc/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "opcalc/cheb_function.hpp"
#include "opcalc/cli/expression.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/ode.hpp"
#include "opcalc/oracle.hpp"

namespace opcalc::cli {
namespace {

using nlohmann::json;

constexpr double kOracleStep = 1e-3;

// 17 significant digits: enough for a lossless double round trip.
std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::vector<double> make_grid(const Interval& interval, int n) {
  std::vector<double> xs(n);
  for (int j = 0; j < n; ++j)
    xs[j] = interval.a() + j * interval.length() / (n - 1);
  xs.front() = interval.a();
  xs.back() = interval.b();
  return xs;
}

// Sampled forcing files: CSV with a header row, x first, then one (re)
// or two (re, im) value columns; extra columns are ignored so solve
// output can be fed back in.
std::function<Complex(double)> load_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open samples file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("samples file is empty: " + path);

  std::vector<std::pair<double, Complex>> samples;
  size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        fields.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw SchemaError(path + " row " + std::to_string(row) + ": bad number");
      }
    }
    if (fields.size() < 2)
      throw SchemaError(path + " row " + std::to_string(row) + ": need x and a value");
    samples.emplace_back(fields[0],
                         Complex(fields[1], fields.size() > 2 ? fields[2] : 0.0));
  }
  if (samples.size() < 2) throw SchemaError(path + ": need at least two sample rows");
  std::sort(samples.begin(), samples.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });

  return [samples](double x) {
    if (x <= samples.front().first) return samples.front().second;
    if (x >= samples.back().first) return samples.back().second;
    const auto it = std::upper_bound(
        samples.begin(), samples.end(), x,
        [](double v, const auto& p) { return v < p.first; });
    const auto& [x1, y1] = *it;
    const auto& [x0, y0] = *(it - 1);
    const double w = (x - x0) / (x1 - x0);
    return (1.0 - w) * y0 + w * y1;
  };
}

struct Forcing {
  GeneralizedFunction cls;
  std::function<Complex(double)> callable;  // null for sampled forcing
};

Forcing build_forcing(const ProblemSpec& spec) {
  switch (spec.forcing_kind) {
    case ForcingKind::None:
      return {GeneralizedFunction::zero(spec.interval), [](double) { return Complex{}; }};
    case ForcingKind::Expression: {
      auto f = parse_expression(spec.forcing_text);
      return {GeneralizedFunction::from_continuous(ChebFunction::interpolate(
                  f, spec.interval, spec.tolerances.interpolation)),
              std::move(f)};
    }
    case ForcingKind::Samples: {
      auto f = load_samples(spec.forcing_text);
      return {GeneralizedFunction::from_continuous(ChebFunction::interpolate(
                  f, spec.interval, spec.tolerances.interpolation)),
              nullptr};
    }
  }
  throw SchemaError("forcing: unknown kind");
}

OdeProblem build_problem(const ProblemSpec& spec, Forcing forcing) {
  return OdeProblem{spec.op, std::move(forcing.cls), spec.interval, spec.initial_values};
}

void write_csv_header(std::ostream& out, const std::vector<std::string>& names) {
  out << "x";
  for (const auto& name : names) out << "," << name << "_re," << name << "_im";
  out << "\n";
}

void write_csv_rows(std::ostream& out, const std::vector<double>& xs,
                    const std::vector<std::vector<Complex>>& columns) {
  for (size_t j = 0; j < xs.size(); ++j) {
    out << fmt(xs[j]);
    for (const auto& column : columns)
      out << "," << fmt(column[j].real()) << "," << fmt(column[j].imag());
    out << "\n";
  }
}

std::vector<Complex> sample(const ChebFunction& u, const std::vector<double>& xs) {
  std::vector<Complex> ys(xs.size());
  for (size_t j = 0; j < xs.size(); ++j) ys[j] = u(xs[j]);
  return ys;
}

int run_expand(const ProblemSpec& spec, std::ostream& out, json& summary) {
  LaurentSeries series;
  json payload;
  if (spec.initial_values) {
    const IvpParts parts = solve_initial_value_parts(build_problem(spec, build_forcing(spec)));
    series = parts.r.is_zero()
                 ? LaurentSeries()
                 : ratio(OperatorPolynomial::monomial(1) * parts.r, spec.op);
    json r = json::array();
    for (const Complex& c : parts.r.coefficients()) r.push_back(complex_json(c));
    payload["series"] = "s*r/f";
    payload["r"] = std::move(r);
  } else {
    series = ratio(OperatorPolynomial({Complex(1.0)}), spec.op);
    payload["series"] = "1/f";
  }

  if (series.is_zero()) {
    payload["valuation"] = nullptr;
    payload["coefficients"] = json::array();
  } else {
    payload["valuation"] = series.valuation();
    json coeffs = json::array();
    for (const Complex& c : series.unit_part().coefficients())
      coeffs.push_back(complex_json(c));
    payload["coefficients"] = std::move(coeffs);
  }
  out << payload.dump(2) << "\n";
  summary["valuation"] = payload["valuation"];
  return 0;
}

int run_homogeneous(const ProblemSpec& spec, std::ostream& out, json& summary) {
  const std::vector<GeneralizedFunction> basis = homogeneous_basis(spec.op, spec.interval);
  const std::vector<double> xs = make_grid(spec.interval, spec.grid_points);

  std::vector<std::string> names;
  std::vector<std::vector<Complex>> columns;
  bool precise = true;
  for (size_t j = 0; j < basis.size(); ++j) {
    names.push_back("xi_" + std::to_string(j));
    columns.push_back(sample(basis[j].representative().body(), xs));
    precise = precise && basis[j].precise();
  }
  write_csv_header(out, names);
  write_csv_rows(out, xs, columns);
  summary["dimension"] = basis.size();
  summary["precise"] = precise;
  return 0;
}

// Solution plus, when initial values anchor a classical trajectory and the
// forcing is callable, the RK4 oracle column and their deviation.
int run_solve(const ProblemSpec& spec, std::ostream& out, json& summary) {
  const Forcing forcing = build_forcing(spec);
  const std::vector<double> xs = make_grid(spec.interval, spec.grid_points);

  ChebFunction solution = ChebFunction::zero(spec.interval);
  if (spec.initial_values) {
    const IvpParts parts = solve_initial_value_parts(build_problem(spec, forcing));
    solution = parts.particular + parts.homogeneous;
  } else {
    const GeneralizedFunction xi = particular_solution(spec.op, forcing.cls);
    const std::optional<ChebFunction> u = materialize(xi);
    if (!u) throw NotMaterializable("particular solution is not a continuous function");
    solution = *u;
  }

  std::vector<std::string> names{"xi"};
  std::vector<std::vector<Complex>> columns{sample(solution, xs)};
  summary["precise"] = solution.precise();

  int status = 0;
  if (spec.initial_values && forcing.callable) {
    columns.push_back(oracle::rk4_at_points(spec.op, *spec.initial_values,
                                            forcing.callable, xs, kOracleStep));
    names.push_back("oracle");
    double deviation = 0.0;
    for (size_t j = 0; j < xs.size(); ++j)
      deviation = std::max(deviation, std::abs(columns[0][j] - columns[1][j]));
    summary["oracle_max_deviation"] = deviation;
    if (deviation > spec.tolerances.oracle) status = 1;
  }
  write_csv_header(out, names);
  write_csv_rows(out, xs, columns);
  return status;
}

int run_verify(const ProblemSpec& spec, std::ostream& out, json& summary) {
  const Forcing forcing = build_forcing(spec);

  GeneralizedFunction xi = GeneralizedFunction::zero(spec.interval);
  if (spec.initial_values)
    xi = solve_initial_value(build_problem(spec, forcing));
  else
    xi = particular_solution(spec.op, forcing.cls);

  json report;
  const bool residual_ok =
      satisfies(spec.op, xi, forcing.cls, spec.tolerances.residual);
  report["residual_pass"] = residual_ok;
  bool all_ok = residual_ok;

  if (spec.initial_values) {
    // xi is continuous by construction here; match its derivatives at 0.
    ChebFunction deriv = xi.representative().body();
    double worst = 0.0;
    for (size_t k = 0; k < spec.initial_values->size(); ++k) {
      const Complex want = (*spec.initial_values)[k];
      worst = std::max(worst, std::abs(deriv(0.0) - want) / (1.0 + std::abs(want)));
      if (k + 1 < spec.initial_values->size()) deriv = deriv.derivative();
    }
    const bool ic_ok = worst <= spec.tolerances.residual;
    report["initial_value_error"] = worst;
    report["initial_value_pass"] = ic_ok;
    all_ok = all_ok && ic_ok;
  }
  report["pass"] = all_ok;
  out << report.dump(2) << "\n";
  summary["pass"] = all_ok;
  return all_ok ? 0 : 1;
}

}  // namespace

int run_command(Command command, const ProblemSpec& spec, std::ostream& out,
                std::ostream& diag) {
  json summary;
  summary["operator_degree"] = spec.op.degree();
  summary["interval"] = json::array({spec.interval.a(), spec.interval.b()});

  int status = 0;
  switch (command) {
    case Command::Expand:
      summary["command"] = "expand";
      status = run_expand(spec, out, summary);
      break;
    case Command::Homogeneous:
      summary["command"] = "homogeneous";
      status = run_homogeneous(spec, out, summary);
      break;
    case Command::Solve:
      summary["command"] = "solve";
      status = run_solve(spec, out, summary);
      break;
    case Command::Verify:
      summary["command"] = "verify";
      status = run_verify(spec, out, summary);
      break;
  }
  summary["exit"] = status;
  diag << summary.dump() << "\n";
  return status;
}

}  // namespace opcalc::cli
