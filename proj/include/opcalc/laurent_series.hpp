#pragma once

#include "opcalc/operator_polynomial.hpp"
#include "opcalc/power_series.hpp"

namespace opcalc {

// Laurent series t^valuation * unit where the unit part has a significant
// constant term. The zero series is the distinguished value with
// valuation() == kInfiniteValuation. t^{-1} plays the role of the
// differentiation symbol s.
class LaurentSeries {
 public:
  LaurentSeries();  // zero series

  // Normalizes on construction: exactly-zero leading coefficients of `unit`
  // fold into the valuation. `reference_scale` guards against cancellation:
  // when the largest coefficient is below tol::kZero * reference_scale the
  // whole value collapses to zero.
  LaurentSeries(int valuation, PowerSeries unit, double reference_scale = 0.0);

  static LaurentSeries one();
  static LaurentSeries t_power(int exponent);  // t^exponent

  bool is_zero() const { return valuation_ == kInfiniteValuation; }
  int valuation() const { return valuation_; }
  const PowerSeries& unit_part() const { return unit_; }

  // The series as a plain power series; requires valuation() >= 0 (always
  // true for the zero series). Result has at least `min_order` coefficients.
  PowerSeries power_series_part(int min_order = 1) const;

  LaurentSeries inverse() const;  // throws DivisionByZeroSeries on zero

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries operator-(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries operator*(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries operator*(Complex, const LaurentSeries&);
  friend LaurentSeries operator/(const LaurentSeries&, const LaurentSeries&);

 private:
  int valuation_ = kInfiniteValuation;
  PowerSeries unit_;
};

// Embedding of the polynomial f(s): valuation -deg f, unit part holding the
// reversed coefficients. Throws ZeroPolynomial for the zero polynomial.
LaurentSeries to_laurent(const OperatorPolynomial& f);

// num / den as a Laurent series. num may be zero (giving the zero series);
// a zero den throws ZeroPolynomial.
LaurentSeries ratio(const OperatorPolynomial& num, const OperatorPolynomial& den);

}  // namespace opcalc
