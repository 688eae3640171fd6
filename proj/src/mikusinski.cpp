#include "opcalc/mikusinski.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "opcalc/errors.hpp"

namespace opcalc {

MikusinskiFunction::MikusinskiFunction(int order, ChebFunction body)
    : order_(order), body_(std::move(body)) {
  if (order < 0) throw std::invalid_argument("MikusinskiFunction order must be nonnegative");
}

bool equal(const MikusinskiFunction& lhs, const MikusinskiFunction& rhs,
           double tolerance) {
  if (!(lhs.interval() == rhs.interval())) return false;
  // s^{n1} u1 = s^{n2} u2 iff J^{n2} u1 = J^{n1} u2.
  const ChebFunction a = iterated_antiderivative(lhs.body(), rhs.order());
  const ChebFunction b = iterated_antiderivative(rhs.body(), lhs.order());
  return (a - b).norm_inf() <= tolerance * (1.0 + a.norm_inf());
}

MikusinskiFunction linear_combination(const MikusinskiFunction& w1,
                                      const MikusinskiFunction& w2, Complex c1,
                                      Complex c2) {
  if (!(w1.interval() == w2.interval()))
    throw IntervalMismatch("operands live on different intervals");
  const int n = std::max(w1.order(), w2.order());
  const ChebFunction u = iterated_antiderivative(w1.body(), n - w1.order());
  const ChebFunction v = iterated_antiderivative(w2.body(), n - w2.order());
  return MikusinskiFunction(n, c1 * u + c2 * v);
}

MikusinskiFunction operator+(const MikusinskiFunction& a, const MikusinskiFunction& b) {
  return linear_combination(a, b, 1.0, 1.0);
}

MikusinskiFunction operator-(const MikusinskiFunction& a, const MikusinskiFunction& b) {
  return linear_combination(a, b, 1.0, -1.0);
}

MikusinskiFunction operator*(Complex c, const MikusinskiFunction& w) {
  return MikusinskiFunction(w.order(), c * w.body());
}

MikusinskiFunction operator*(const LaurentSeries& h, const MikusinskiFunction& w) {
  if (h.is_zero()) return MikusinskiFunction::zero(w.interval());
  const int v = h.valuation();
  if (v >= 0)
    return MikusinskiFunction(
        w.order(), apply_series(h.unit_part(), iterated_antiderivative(w.body(), v)));
  return MikusinskiFunction(w.order() - v, apply_series(h.unit_part(), w.body()));
}

MikusinskiFunction integrate(const MikusinskiFunction& w) {
  return LaurentSeries::t_power(1) * w;
}

MikusinskiFunction normalize(const MikusinskiFunction& w) {
  int order = w.order();
  ChebFunction body = w.body();
  // u = J(u') exactly when u(0) = 0, so each reduction step preserves the
  // represented function.
  while (order > 0 && std::abs(body(0.0)) <= tol::kReduce * body.norm_inf()) {
    body = body.derivative();
    --order;
  }
  return MikusinskiFunction(order, std::move(body));
}

}  // namespace opcalc
