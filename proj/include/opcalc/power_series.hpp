#pragma once

#include <vector>

#include "opcalc/tolerances.hpp"
#include "opcalc/types.hpp"

namespace opcalc {

// Truncated formal power series in t holding the coefficients of
// t^0 .. t^(order()-1). Immutable value type; binary operations truncate to
// the shorter operand, so a result certifies exactly the coefficients both
// inputs certify.
class PowerSeries {
 public:
  PowerSeries();  // zero series of order 1

  // Pads with zeros (or truncates) so the series has exactly `order`
  // coefficients; order <= 0 means "use coeffs.size()".
  explicit PowerSeries(std::vector<Complex> coeffs, int order = 0);

  static PowerSeries constant(Complex value, int order = 1);
  static PowerSeries geometric(Complex ratio, int order);  // 1 + r t + r^2 t^2 + ...

  int order() const { return static_cast<int>(coeffs_.size()); }
  Complex coeff(int k) const;
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  double max_abs() const;

  // Index of the first coefficient exceeding relative_tolerance * max|c_j|;
  // kInfiniteValuation when the series is zero.
  int valuation(double relative_tolerance = tol::kZero) const;

  PowerSeries truncated(int order) const;
  PowerSeries shifted_up(int count) const;    // multiply by t^count; order grows
  PowerSeries shifted_down(int count) const;  // drop the first `count` coefficients

  // Multiplicative inverse; requires |c_0| > tol::kUnit, else throws NotAUnit.
  PowerSeries inverse() const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries&, const PowerSeries&);
  friend PowerSeries operator-(const PowerSeries&, const PowerSeries&);
  friend PowerSeries operator*(const PowerSeries&, const PowerSeries&);
  friend PowerSeries operator*(Complex, const PowerSeries&);

 private:
  std::vector<Complex> coeffs_;
};

}  // namespace opcalc
