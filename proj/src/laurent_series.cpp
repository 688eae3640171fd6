#include "opcalc/laurent_series.hpp"

#include <algorithm>
#include <cmath>

#include "opcalc/errors.hpp"

namespace opcalc {

LaurentSeries::LaurentSeries() = default;

LaurentSeries::LaurentSeries(int valuation, PowerSeries unit, double reference_scale)
    : valuation_(valuation), unit_(std::move(unit)) {
  const double own = unit_.max_abs();
  const double scale = std::max(own, reference_scale);
  if (scale == 0.0 || own <= tol::kZero * scale) {
    valuation_ = kInfiniteValuation;
    unit_ = PowerSeries();
    return;
  }
  // Only exactly-zero leads fold here. Coefficients may grow geometrically,
  // so magnitude comparisons across indices misread genuine leading terms;
  // near-cancellations are folded at their source, in operator+.
  int shift = 0;
  while (shift < unit_.order() && unit_.coeff(shift) == Complex{}) ++shift;
  if (shift > 0) {
    unit_ = unit_.shifted_down(shift);
    valuation_ += shift;
  }
}

LaurentSeries LaurentSeries::one() {
  return LaurentSeries(0, PowerSeries::constant(1.0, tol::kDefaultOrder));
}

LaurentSeries LaurentSeries::t_power(int exponent) {
  return LaurentSeries(exponent, PowerSeries::constant(1.0, tol::kDefaultOrder));
}

PowerSeries LaurentSeries::power_series_part(int min_order) const {
  if (is_zero()) return PowerSeries(std::vector<Complex>{}, std::max(min_order, 1));
  if (valuation_ < 0)
    throw Error("series has a pole at t = 0 and no power series part");
  PowerSeries p = unit_.shifted_up(valuation_);
  if (p.order() < min_order) p = p.truncated(min_order);
  return p;
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_zero()) throw DivisionByZeroSeries("inverse of the zero series");
  return LaurentSeries(-valuation_, unit_.inverse());
}

LaurentSeries LaurentSeries::operator-() const {
  if (is_zero()) return *this;
  return LaurentSeries(valuation_, -unit_);
}

LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const int v = std::min(x.valuation_, y.valuation_);
  // Coefficients are certified only up to the shorter knowledge window
  // (below its valuation an operand is exactly zero, so end > v always).
  const int end = std::min(x.valuation_ + x.unit_.order(), y.valuation_ + y.unit_.order());
  const int len = end - v;
  std::vector<Complex> c(len);
  int lead = 0;
  bool scanning = true;
  for (int i = 0; i < len; ++i) {
    const int g = v + i;
    const Complex xc = x.unit_.coeff(g - x.valuation_);
    const Complex yc = y.unit_.coeff(g - y.valuation_);
    c[i] = xc + yc;
    // A leading sum far below the terms that built it is cancellation
    // residue; it folds into the valuation. The operand magnitudes at the
    // same index are the scale the residue lives on.
    if (scanning &&
        std::abs(c[i]) <= tol::kZero * std::max(std::abs(xc), std::abs(yc)))
      ++lead;
    else
      scanning = false;
  }
  if (lead == len) return LaurentSeries();
  if (lead > 0) c.erase(c.begin(), c.begin() + lead);
  return LaurentSeries(v + lead, PowerSeries(std::move(c)));
}

LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) { return x + (-y); }

LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) {
  if (x.is_zero() || y.is_zero()) return LaurentSeries();
  return LaurentSeries(x.valuation_ + y.valuation_, x.unit_ * y.unit_);
}

LaurentSeries operator*(Complex scale, const LaurentSeries& x) {
  if (x.is_zero() || scale == Complex{}) return LaurentSeries();
  return LaurentSeries(x.valuation_, scale * x.unit_);
}

LaurentSeries operator/(const LaurentSeries& x, const LaurentSeries& y) {
  if (y.is_zero()) throw DivisionByZeroSeries("division by the zero series");
  if (x.is_zero()) return LaurentSeries();
  return x * y.inverse();
}

LaurentSeries to_laurent(const OperatorPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("cannot embed the zero polynomial");
  const int d = f.degree();
  std::vector<Complex> rev(d + 1);
  for (int i = 0; i <= d; ++i) rev[i] = f.coeff(d - i);
  return LaurentSeries(-d, PowerSeries(std::move(rev), std::max(d + 1, tol::kDefaultOrder)));
}

LaurentSeries ratio(const OperatorPolynomial& num, const OperatorPolynomial& den) {
  if (den.is_zero()) throw ZeroPolynomial("ratio denominator is the zero polynomial");
  if (num.is_zero()) return LaurentSeries();
  return to_laurent(num) / to_laurent(den);
}

}  // namespace opcalc
