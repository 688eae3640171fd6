#include "opcalc/ode.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opcalc/errors.hpp"
#include "opcalc/laurent_series.hpp"

namespace opcalc {
namespace {

const OperatorPolynomial& one_poly() {
  static const OperatorPolynomial one({Complex(1.0)});
  return one;
}

// Gaussian elimination with partial pivoting; rhs is consumed.
std::vector<Complex> solve_dense(std::vector<std::vector<Complex>> a,
                                 std::vector<Complex> rhs) {
  const int d = static_cast<int>(rhs.size());
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    for (int row = col + 1; row < d; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    if (std::abs(a[pivot][col]) <= tol::kUnit)
      throw SingularSystem("coefficient-matching system is singular");
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int row = col + 1; row < d; ++row) {
      const Complex factor = a[row][col] / a[col][col];
      if (factor == Complex{}) continue;
      for (int j = col; j < d; ++j) a[row][j] -= factor * a[col][j];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::vector<Complex> x(d);
  for (int row = d - 1; row >= 0; --row) {
    Complex acc = rhs[row];
    for (int j = row + 1; j < d; ++j) acc -= a[row][j] * x[j];
    x[row] = acc / a[row][row];
  }
  return x;
}

}  // namespace

GeneralizedFunction apply_operator(const OperatorPolynomial& f,
                                   const GeneralizedFunction& xi) {
  if (f.is_zero()) return GeneralizedFunction::zero(xi.interval());
  return GeneralizedFunction(to_laurent(f) * xi.representative());
}

GeneralizedFunction particular_solution(const OperatorPolynomial& f,
                                        const GeneralizedFunction& omega) {
  return GeneralizedFunction(ratio(one_poly(), f) * omega.representative());
}

std::vector<GeneralizedFunction> homogeneous_basis(const OperatorPolynomial& f,
                                                   const Interval& interval) {
  if (f.is_zero()) throw ZeroPolynomial("operator polynomial is zero");
  const int d = f.degree();
  std::vector<GeneralizedFunction> basis;
  for (int j = 0; j < d; ++j) {
    // s^{j+1} / f has valuation d - j - 1 >= 0; power_series_part checks.
    const PowerSeries g = ratio(OperatorPolynomial::monomial(j + 1), f).power_series_part();
    basis.push_back(GeneralizedFunction::from_continuous(borel_sum(g, interval)));
  }
  return basis;
}

IvpParts solve_initial_value_parts(const OdeProblem& problem) {
  const OperatorPolynomial& f = problem.op;
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("operator degree must be at least 1");
  if (!problem.initial_values || static_cast<int>(problem.initial_values->size()) != d)
    throw std::invalid_argument("need one initial value per operator degree");
  if (!(problem.forcing.interval() == problem.interval))
    throw IntervalMismatch("forcing interval differs from the problem interval");
  if (std::abs(f.leading()) <= tol::kUnit)
    throw SingularSystem("leading coefficient too small to divide by");

  const std::optional<ChebFunction> forcing = materialize(problem.forcing);
  if (!forcing)
    throw NotMaterializable("forcing has no continuous representative");

  // (1/f) * forcing has valuation deg f > 0, so the result stays at order 0.
  const ChebFunction particular =
      (ratio(one_poly(), f) * MikusinskiFunction::from_continuous(*forcing)).body();

  // delta_k = desired xi^(k)(0) minus what the particular part contributes.
  std::vector<Complex> delta(d);
  ChebFunction deriv = particular;
  for (int k = 0; k < d; ++k) {
    delta[k] = (*problem.initial_values)[k] - deriv(0.0);
    if (k + 1 < d) deriv = deriv.derivative();
  }

  // The expansion coefficients of s r / f are the derivatives at 0 of its
  // entire sum, so matching initial values is a d x d linear solve over the
  // columns s^{j+1} / f.
  std::vector<std::vector<Complex>> matrix(d, std::vector<Complex>(d));
  for (int j = 0; j < d; ++j) {
    const PowerSeries g =
        ratio(OperatorPolynomial::monomial(j + 1), f).power_series_part(d);
    for (int k = 0; k < d; ++k) matrix[k][j] = g.coeff(k);
  }
  const OperatorPolynomial r(solve_dense(std::move(matrix), std::move(delta)));

  ChebFunction homogeneous = ChebFunction::zero(problem.interval);
  if (!r.is_zero()) {
    const PowerSeries g =
        ratio(OperatorPolynomial::monomial(1) * r, f).power_series_part();
    homogeneous = borel_sum(g, problem.interval);
  }
  return IvpParts{particular, r, std::move(homogeneous)};
}

GeneralizedFunction solve_initial_value(const OdeProblem& problem) {
  const IvpParts parts = solve_initial_value_parts(problem);
  return GeneralizedFunction::from_continuous(parts.particular + parts.homogeneous);
}

bool satisfies(const OperatorPolynomial& f, const GeneralizedFunction& xi,
               const GeneralizedFunction& omega, double tolerance) {
  return equal(apply_operator(f, xi), omega, tolerance);
}

}  // namespace opcalc
