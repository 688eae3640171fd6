#include "opcalc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "opcalc/errors.hpp"

namespace opcalc::oracle {
namespace {

using State = std::vector<Complex>;

// y' = F(x, y) for the companion system of the scalar equation.
State companion_rhs(const OperatorPolynomial& op,
                    const std::function<Complex(double)>& forcing, double x,
                    const State& y) {
  const int d = op.degree();
  State dy(d);
  for (int i = 0; i + 1 < d; ++i) dy[i] = y[i + 1];
  Complex top = forcing ? forcing(x) : Complex{};
  for (int j = 0; j < d; ++j) top -= op.coeff(j) * y[j];
  dy[d - 1] = top / op.coeff(d);
  return dy;
}

State rk4_step(const OperatorPolynomial& op,
               const std::function<Complex(double)>& forcing, double x,
               const State& y, double h) {
  const int d = static_cast<int>(y.size());
  const State k1 = companion_rhs(op, forcing, x, y);
  State tmp(d);
  for (int i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  const State k2 = companion_rhs(op, forcing, x + 0.5 * h, tmp);
  for (int i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  const State k3 = companion_rhs(op, forcing, x + 0.5 * h, tmp);
  for (int i = 0; i < d; ++i) tmp[i] = y[i] + h * k3[i];
  const State k4 = companion_rhs(op, forcing, x + h, tmp);
  State out(d);
  for (int i = 0; i < d; ++i)
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

void check_problem(const OperatorPolynomial& op,
                   const std::vector<Complex>& initial_values, double step) {
  if (op.degree() < 1 || std::abs(op.leading()) < 1e-300)
    throw ZeroLeadingCoefficient("companion system needs a nonzero leading coefficient");
  if (static_cast<int>(initial_values.size()) != op.degree())
    throw std::invalid_argument("need one initial value per operator degree");
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
}

// March from 0 to target, clipping the last step; records each grid point.
void march(const OperatorPolynomial& op,
           const std::function<Complex(double)>& forcing, const State& start,
           double target, double step, std::vector<double>& xs,
           std::vector<Complex>& ys) {
  const double dir = target < 0.0 ? -1.0 : 1.0;
  State y = start;
  double x = 0.0;
  while (dir * (target - x) > 0.0) {
    const double h = dir * std::min(step, dir * (target - x));
    y = rk4_step(op, forcing, x, y, h);
    x += h;
    if (dir * (target - x) <= 0.5 * step * 1e-9) x = target;
    xs.push_back(x);
    ys.push_back(y[0]);
  }
}

}  // namespace

SampledTrajectory rk4_solve(const OperatorPolynomial& op,
                            const std::vector<Complex>& initial_values,
                            const std::function<Complex(double)>& forcing,
                            const Interval& interval, double step) {
  check_problem(op, initial_values, step);
  std::vector<double> left_xs, right_xs;
  std::vector<Complex> left_ys, right_ys;
  march(op, forcing, initial_values, interval.a(), step, left_xs, left_ys);
  march(op, forcing, initial_values, interval.b(), step, right_xs, right_ys);

  SampledTrajectory out;
  out.xs.reserve(left_xs.size() + right_xs.size() + 1);
  out.ys.reserve(out.xs.capacity());
  for (size_t i = left_xs.size(); i-- > 0;) {
    out.xs.push_back(left_xs[i]);
    out.ys.push_back(left_ys[i]);
  }
  out.xs.push_back(0.0);
  out.ys.push_back(initial_values[0]);
  for (size_t i = 0; i < right_xs.size(); ++i) {
    out.xs.push_back(right_xs[i]);
    out.ys.push_back(right_ys[i]);
  }
  return out;
}

std::vector<Complex> rk4_at_points(const OperatorPolynomial& op,
                                   const std::vector<Complex>& initial_values,
                                   const std::function<Complex(double)>& forcing,
                                   const std::vector<double>& points, double step) {
  check_problem(op, initial_values, step);
  std::vector<Complex> out(points.size());

  // One sweep per sign, visiting the requested points in marching order.
  for (const double dir : {-1.0, 1.0}) {
    std::vector<size_t> order;
    for (size_t i = 0; i < points.size(); ++i)
      if (dir * points[i] > 0.0) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
      return dir * points[i] < dir * points[j];
    });

    State y = initial_values;
    double x = 0.0;
    for (const size_t idx : order) {
      const double target = points[idx];
      while (dir * (target - x) > 0.0) {
        const double h = dir * std::min(step, dir * (target - x));
        y = rk4_step(op, forcing, x, y, h);
        x += h;
      }
      x = target;
      out[idx] = y[0];
    }
  }
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i] == 0.0) out[i] = initial_values[0];
  return out;
}

Complex simpson_integral(const std::function<Complex(double)>& u, double x, int steps) {
  if (steps < 2 || steps % 2 != 0)
    throw std::invalid_argument("steps must be even and at least 2");
  if (x == 0.0) return Complex{};
  const double h = x / steps;
  Complex acc = u(0.0) + u(x);
  for (int k = 1; k < steps; ++k) acc += (k % 2 == 1 ? 4.0 : 2.0) * u(k * h);
  return acc * (h / 3.0);
}

Complex ClosedForm::operator()(double x) const {
  switch (kind) {
    case Kind::Exponential:
      return std::exp(rate * x);
    case Kind::Sine:
      return Complex(std::sin(x));
    case Kind::Cosine:
      return Complex(std::cos(x));
    case Kind::Polynomial: {
      Complex acc{};
      for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
      return acc;
    }
  }
  return Complex{};
}

}  // namespace opcalc::oracle
