#pragma once

// Deterministic generators shared by the test binaries. Everything draws
// from one seeded engine per binary, so a failure reproduces exactly.

#include <random>
#include <vector>

#include "opcalc/cheb_function.hpp"
#include "opcalc/operator_polynomial.hpp"
#include "opcalc/power_series.hpp"

namespace testgen {

using opcalc::ChebFunction;
using opcalc::Complex;
using opcalc::Interval;
using opcalc::OperatorPolynomial;
using opcalc::PowerSeries;

inline std::mt19937& rng() {
  static std::mt19937 engine(0x5eed);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Complex random_complex(double radius) {
  return {uniform(-radius, radius), uniform(-radius, radius)};
}

// Unit series whose inverse stays well conditioned: constant term near the
// unit circle, higher coefficients at most 1/2.
inline PowerSeries random_unit_series(int order) {
  std::vector<Complex> c(order);
  c[0] = std::polar(uniform(0.7, 1.3), uniform(0.0, 6.28));
  for (int k = 1; k < order; ++k) c[k] = random_complex(0.5);
  return PowerSeries(std::move(c));
}

// Analytic function proxy: Chebyshev coefficients decaying by halves.
inline ChebFunction random_smooth(const Interval& interval, int degree = 10) {
  std::vector<Complex> c(degree + 1);
  double scale = 1.0;
  for (auto& z : c) {
    z = scale * random_complex(1.0);
    scale *= 0.5;
  }
  c[0] += Complex(1.0);  // keep the function comfortably nonzero
  return ChebFunction(interval, std::move(c));
}

// Monic operator polynomial with all roots in |lambda| <= 2.
inline OperatorPolynomial random_operator(int degree) {
  OperatorPolynomial f({Complex(1.0)});
  for (int i = 0; i < degree; ++i)
    f = f * OperatorPolynomial({-random_complex(1.4), Complex(1.0)});
  return f;
}

// Polynomial with integer coefficients in [-bound, bound].
inline OperatorPolynomial random_integer_poly(int degree, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Complex> c(degree + 1);
  for (auto& z : c) z = Complex(static_cast<double>(d(rng())));
  return OperatorPolynomial(std::move(c));
}

}  // namespace testgen
