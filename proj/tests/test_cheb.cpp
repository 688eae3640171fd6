#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "opcalc/cheb_function.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/oracle.hpp"
#include "support.hpp"

using namespace opcalc;

namespace {

const Interval unit_iv{-1.0, 1.0};

double max_dev(const ChebFunction& u, const std::function<Complex(double)>& ref,
               int samples = 101) {
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double x =
        u.interval().a() + j * u.interval().length() / (samples - 1);
    worst = std::max(worst, std::abs(u(x) - ref(x)));
  }
  return worst;
}

}  // namespace

TEST_CASE("interpolation reproduces analytic functions") {
  const ChebFunction e = ChebFunction::interpolate(
      [](double x) { return Complex(std::exp(x)); }, unit_iv, tol::kTrim);
  CHECK(e.precise());
  CHECK(e.degree() <= 24);
  CHECK(max_dev(e, [](double x) { return Complex(std::exp(x)); }) < 1e-13);

  const Interval wide{-2.0, 3.0};
  const ChebFunction s = ChebFunction::interpolate(
      [](double x) { return Complex(std::sin(x)); }, wide, tol::kTrim);
  CHECK(max_dev(s, [](double x) { return Complex(std::sin(x)); }) < 1e-12);
}

TEST_CASE("interpolation of a kink hits the cap and drops the precise flag") {
  const ChebFunction v = ChebFunction::interpolate(
      [](double x) { return Complex(std::abs(x)); }, unit_iv, tol::kTrim);
  CHECK_FALSE(v.precise());
  // Still a usable approximation, just not at kernel accuracy.
  CHECK(max_dev(v, [](double x) { return Complex(std::abs(x)); }) < 1e-3);
}

TEST_CASE("constructors and evaluation") {
  const ChebFunction x = ChebFunction::identity(Interval(-2.0, 4.0));
  CHECK(std::abs(x(3.5) - Complex(3.5)) < 1e-14);
  CHECK(std::abs(x(-2.0) - Complex(-2.0)) < 1e-14);

  const ChebFunction c = ChebFunction::constant(unit_iv, Complex(2.0, -1.0));
  CHECK(c(0.3) == Complex(2.0, -1.0));
  CHECK(ChebFunction::zero(unit_iv).norm_inf() == 0.0);

  CHECK_THROWS_AS(c(1.5), OutOfDomain);
}

TEST_CASE("trailing coefficient trim keeps values intact") {
  std::vector<Complex> coeffs{Complex(1.0), Complex(0.5), Complex(1e-17)};
  const ChebFunction u(unit_iv, coeffs);
  CHECK(u.size() == 2);
  CHECK(std::abs(u(0.5) - (Complex(1.0) + 0.5 * 0.5)) < 1e-14);
}

TEST_CASE("antiderivative vanishes at zero and matches quadrature") {
  const ChebFunction f = ChebFunction::interpolate(
      [](double x) { return Complex(std::cos(1.7 * x)); }, Interval(-1.5, 1.0),
      tol::kTrim);
  const ChebFunction F = f.antiderivative();
  CHECK(std::abs(F(0.0)) < 1e-14);
  for (const double x : {-1.5, -0.4, 0.3, 1.0}) {
    const Complex ref = oracle::simpson_integral(
        [](double t) { return Complex(std::cos(1.7 * t)); }, x, 2000);
    CHECK(std::abs(F(x) - ref) < 1e-11);
  }
}

TEST_CASE("iterated antiderivative of one gives x^n / n!") {
  const ChebFunction one = ChebFunction::constant(unit_iv, 1.0);
  const ChebFunction j3 = iterated_antiderivative(one, 3);
  for (const double x : {-1.0, -0.2, 0.7})
    CHECK(std::abs(j3(x) - Complex(x * x * x / 6.0)) < 1e-14);
}

TEST_CASE("derivative inverts antiderivative and matches closed forms") {
  const ChebFunction s = ChebFunction::interpolate(
      [](double x) { return Complex(std::sin(x)); }, unit_iv, tol::kTrim);
  CHECK(max_dev(s.derivative(), [](double x) { return Complex(std::cos(x)); }) < 1e-11);
  CHECK(max_dev(s.antiderivative().derivative(),
                [](double x) { return Complex(std::sin(x)); }) < 1e-12);
  CHECK(ChebFunction::constant(unit_iv, 3.0).derivative().norm_inf() == 0.0);
}

TEST_CASE("norms") {
  const ChebFunction s = ChebFunction::interpolate(
      [](double x) { return Complex(std::sin(x)); }, unit_iv, tol::kTrim);
  CHECK(s.norm_inf() == doctest::Approx(std::sin(1.0)).epsilon(1e-12));
  CHECK(s.coeff_sum() >= s.norm_inf());
}

TEST_CASE("arithmetic checks intervals and propagates the precise flag") {
  const ChebFunction a = ChebFunction::constant(unit_iv, 1.0);
  const ChebFunction b = ChebFunction::identity(unit_iv);
  CHECK(std::abs((a + b)(0.25) - Complex(1.25)) < 1e-14);
  CHECK(std::abs((Complex(2.0) * b - a)(0.5)) < 1e-14);

  CHECK_THROWS_AS(a + ChebFunction::constant(Interval(-2.0, 1.0), 1.0),
                  IntervalMismatch);

  CHECK_FALSE((a.marked_imprecise() + b).precise());
  CHECK((a + b).precise());
}

TEST_CASE("series action: geometric series turns one into exp") {
  // sum of J^k applied to the constant 1 is sum x^k / k!.
  const ChebFunction one = ChebFunction::constant(unit_iv, 1.0);
  const ChebFunction e = apply_series(PowerSeries::geometric(1.0, 64), one);
  CHECK(e.precise());
  CHECK(max_dev(e, [](double x) { return Complex(std::exp(x)); }) < 1e-12);
}

TEST_CASE("series action tail bound certifies the cutoff") {
  // Coefficients 40^k: the factorial wins long before order 64, but the
  // last held coefficient still matters, so the flag must drop.
  const ChebFunction one = ChebFunction::constant(unit_iv, 1.0);
  const ChebFunction hot = apply_series(PowerSeries::geometric(40.0, 64), one);
  CHECK_FALSE(hot.precise());

  const ChebFunction cold = apply_series(PowerSeries::geometric(0.5, 64), one);
  CHECK(cold.precise());
}

TEST_CASE("borel sum realizes entire functions") {
  const ChebFunction e2 = borel_sum(PowerSeries::geometric(-2.0, 64), unit_iv);
  CHECK(max_dev(e2, [](double x) { return Complex(std::exp(-2.0 * x)); }) < 1e-12);

  // Same series acting on the constant one.
  const ChebFunction via_action = apply_series(
      PowerSeries::geometric(-2.0, 64), ChebFunction::constant(unit_iv, 1.0));
  CHECK(max_dev(e2, [&](double x) { return via_action(x); }) < 1e-12);
}
