#pragma once

#include <functional>
#include <vector>

#include "opcalc/interval.hpp"
#include "opcalc/power_series.hpp"

namespace opcalc {

// Function on a compact interval containing 0, stored as coefficients of
// first-kind Chebyshev polynomials over the affinely mapped interval.
// Trailing coefficients below tol::kTrim * max|coeff| are dropped after
// every operation. precise() reports whether every step that produced this
// value met its accuracy target; operations propagate the flag.
class ChebFunction {
 public:
  ChebFunction(Interval interval, std::vector<Complex> coeffs, bool precise = true);

  static ChebFunction zero(const Interval& interval);
  static ChebFunction constant(const Interval& interval, Complex value);
  static ChebFunction identity(const Interval& interval);  // x -> x

  // Adaptive interpolation: the point count doubles from 17 until the
  // trailing quarter of the coefficients falls below tolerance * max|coeff|.
  // Hitting the size cap returns the best effort with precise() == false.
  static ChebFunction interpolate(const std::function<Complex(double)>& f,
                                  const Interval& interval, double tolerance);

  const Interval& interval() const { return interval_; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  int degree() const { return size() - 1; }
  bool precise() const { return precise_; }
  ChebFunction marked_imprecise() const;

  Complex operator()(double x) const;  // throws OutOfDomain outside [a, b]

  // Antiderivative vanishing at x = 0; exact on the coefficients, degree + 1.
  ChebFunction antiderivative() const;
  ChebFunction derivative() const;

  double norm_inf() const;   // sampled sup norm
  double coeff_sum() const;  // sum of |c_k|, an upper bound for norm_inf

  ChebFunction operator-() const;
  friend ChebFunction operator+(const ChebFunction&, const ChebFunction&);
  friend ChebFunction operator-(const ChebFunction&, const ChebFunction&);
  friend ChebFunction operator*(Complex, const ChebFunction&);

 private:
  Interval interval_;
  std::vector<Complex> coeffs_;
  bool precise_ = true;
};

ChebFunction iterated_antiderivative(ChebFunction u, int count);

// The series g acting through repeated integration: sum of g_k * J^k(u),
// cut off once the factorial tail bound drops below tol::kTail. If the
// bound is still live at the truncation order the result is returned with
// precise() == false.
ChebFunction apply_series(const PowerSeries& g, const ChebFunction& u);

// Entire function with Taylor coefficients g_k / k! (the Borel-type sum of
// g), realized on the given interval. Equals apply_series(g, 1).
ChebFunction borel_sum(const PowerSeries& g, const Interval& interval);

}  // namespace opcalc
