#pragma once

#include <functional>
#include <vector>

#include "opcalc/interval.hpp"
#include "opcalc/operator_polynomial.hpp"

// Independent reference solvers used to cross-check the series kernel.
// These deliberately avoid the Chebyshev and series machinery: they see an
// OperatorPolynomial only as a list of coefficients.
namespace opcalc::oracle {

struct SampledTrajectory {
  std::vector<double> xs;  // strictly increasing
  std::vector<Complex> ys;
};

// Classical fixed-step RK4 on the companion system of
// a_d y^(d) + ... + a_0 y = forcing, integrating from 0 towards both
// interval ends (final partial steps land exactly on the ends). A null
// forcing means 0. Throws ZeroLeadingCoefficient when |a_d| is negligible.
SampledTrajectory rk4_solve(const OperatorPolynomial& op,
                            const std::vector<Complex>& initial_values,
                            const std::function<Complex(double)>& forcing,
                            const Interval& interval, double step);

// RK4 values at the given sorted points (all inside the interval),
// substepping so every requested point is hit exactly.
std::vector<Complex> rk4_at_points(const OperatorPolynomial& op,
                                   const std::vector<Complex>& initial_values,
                                   const std::function<Complex(double)>& forcing,
                                   const std::vector<double>& points, double step);

// Composite Simpson approximation of the integral of u from 0 to x;
// steps must be even and >= 2. x may be negative.
Complex simpson_integral(const std::function<Complex(double)>& u, double x, int steps);

// Closed-form reference values for the comparisons used in tests.
struct ClosedForm {
  enum class Kind { Exponential, Sine, Cosine, Polynomial };

  static ClosedForm exponential(Complex rate) { return {Kind::Exponential, rate, {}}; }
  static ClosedForm sine() { return {Kind::Sine, {}, {}}; }
  static ClosedForm cosine() { return {Kind::Cosine, {}, {}}; }
  static ClosedForm polynomial(std::vector<Complex> coeffs) {
    return {Kind::Polynomial, {}, std::move(coeffs)};
  }

  Complex operator()(double x) const;

  Kind kind;
  Complex rate;
  std::vector<Complex> coeffs;  // ascending powers of x
};

}  // namespace opcalc::oracle
