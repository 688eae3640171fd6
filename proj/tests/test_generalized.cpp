#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "opcalc/errors.hpp"
#include "opcalc/generalized.hpp"
#include "opcalc/oracle.hpp"
#include "support.hpp"

using namespace opcalc;
using testgen::random_complex;
using testgen::random_smooth;

namespace {

const Interval unit_iv{-1.0, 1.0};

MikusinskiFunction mk(int order, const ChebFunction& body) {
  return MikusinskiFunction(order, body);
}

GeneralizedFunction cls(int order, const ChebFunction& body) {
  return GeneralizedFunction(mk(order, body));
}

ChebFunction one() { return ChebFunction::constant(unit_iv, 1.0); }
ChebFunction ident() { return ChebFunction::identity(unit_iv); }

ChebFunction from_lambda(const std::function<Complex(double)>& f) {
  return ChebFunction::interpolate(f, unit_iv, 1e-14);
}

// Body of the null element sum_j a_j s^j at order m >= degree: the closed
// form sum_j a_j x^(m-j) / (m-j)!.
ChebFunction null_body(const std::vector<Complex>& a, int m) {
  return from_lambda([&, m](double x) {
    Complex acc = 0.0;
    for (int j = 1; j < static_cast<int>(a.size()); ++j) {
      double mono = 1.0;
      for (int p = 0; p < m - j; ++p) mono *= x / (p + 1);
      acc += a[j] * mono;
    }
    return acc;
  });
}

}  // namespace

TEST_CASE("null class membership on basic representatives") {
  CHECK(represents_zero(mk(1, one())));
  CHECK_FALSE(represents_zero(mk(0, one())));
  CHECK(represents_zero(mk(2, ident())));
  CHECK_FALSE(represents_zero(mk(2, from_lambda([](double x) { return x * x; }))));
  CHECK(represents_zero(mk(3, from_lambda([](double x) { return x * x; }))));
  CHECK(represents_zero(MikusinskiFunction::zero(unit_iv)));
}

TEST_CASE("random null elements are recognized") {
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 6;
    const int m = d + trial % 3;
    std::vector<Complex> a(d + 1);
    for (int j = 1; j <= d; ++j) a[j] = random_complex(2.0);
    if (std::abs(a[d]) < 0.1) a[d] = 1.0;
    CHECK(represents_zero(mk(m, null_body(a, m))));
  }
}

TEST_CASE("generic functions are not null") {
  for (int trial = 0; trial < 20; ++trial) {
    const int m = trial % 9;
    CHECK_FALSE(represents_zero(mk(m, random_smooth(unit_iv))));
  }
}

TEST_CASE("membership beyond the power basis cap") {
  // x^39 / 39! at order 40 is s * 1 in disguise; its degree forces the
  // normalization route.
  const ChebFunction spike = from_lambda([](double x) {
    double mono = 1.0;
    for (int p = 0; p < 39; ++p) mono *= x / (p + 1);
    return Complex(mono);
  });
  CHECK(spike.degree() > 30);
  CHECK(represents_zero(mk(40, spike)));

  // Geometrically decaying coefficients keep significant content at every
  // index, so no order smaller than the degree can absorb them.
  std::vector<Complex> slow(46);
  for (int k = 0; k < 46; ++k) slow[k] = std::pow(0.7, k);
  const ChebFunction rough(unit_iv, slow);
  CHECK(rough.degree() > 30);
  CHECK_FALSE(represents_zero(mk(31, rough)));
}

TEST_CASE("class equality") {
  const ChebFunction u = random_smooth(unit_iv);

  // Adding a constant at order 1 changes nothing: the difference is s * 1.
  CHECK(equal(cls(1, u + 3.0 * one()), cls(1, u)));
  CHECK_FALSE(equal(cls(0, one()), cls(0, ident())));
  CHECK(equal(cls(0, u), cls(2, u.antiderivative().antiderivative())));
  CHECK_THROWS_AS(equal(cls(0, u), GeneralizedFunction::zero(Interval(-2.0, 2.0))),
                  IntervalMismatch);
}

TEST_CASE("derivative is the classical one on smooth classes") {
  const ChebFunction e = from_lambda([](double x) { return std::exp(x); });
  const ChebFunction sine = from_lambda([](double x) { return std::sin(x); });
  const ChebFunction cosine = from_lambda([](double x) { return std::cos(x); });

  // exp(0) != 0, so this exercises the quotient, not just J bookkeeping.
  CHECK(equal(derivative(cls(0, e)), cls(0, e)));
  CHECK(equal(derivative(cls(0, sine)), cls(0, cosine)));
  CHECK(equal(derivative(cls(0, cosine)), Complex(-1.0) * cls(0, sine)));
  CHECK(equal(derivative(cls(0, sine), 2), Complex(-1.0) * cls(0, sine)));
}

TEST_CASE("derivative and integration invert each other") {
  const GeneralizedFunction xi = cls(1, random_smooth(unit_iv));
  const GeneralizedFunction dxi = derivative(xi);
  CHECK(dxi.representative().order() == 2);
  CHECK(equal(GeneralizedFunction(integrate(dxi.representative())), xi));
  CHECK(equal(derivative(GeneralizedFunction(integrate(xi.representative()))), xi));
  // Iterated form matches repetition.
  CHECK(equal(derivative(xi, 3), derivative(derivative(derivative(xi)))));
}

TEST_CASE("materialization") {
  const ChebFunction u = random_smooth(unit_iv);

  auto direct = materialize(cls(0, u));
  REQUIRE(direct.has_value());
  CHECK((*direct - u).norm_inf() < 1e-10);

  // s^2 (J^2 u + x) differs from u by s^2 x, a null element.
  auto shifted = materialize(
      cls(2, iterated_antiderivative(u, 2) + ident()));
  REQUIRE(shifted.has_value());
  CHECK((*shifted - u).norm_inf() < 1e-8);

  // s e^x materializes back to e^x; the dropped delta is the value at 0.
  const ChebFunction e = from_lambda([](double x) { return std::exp(x); });
  auto exp_again = materialize(cls(1, e));
  REQUIRE(exp_again.has_value());
  CHECK((*exp_again - e).norm_inf() < 1e-8);
}

TEST_CASE("linear structure") {
  const GeneralizedFunction xi = cls(1, random_smooth(unit_iv));
  const GeneralizedFunction eta = cls(0, random_smooth(unit_iv));
  CHECK(equal((xi + eta) - eta, xi));
  CHECK(equal(Complex(2.0) * xi, xi + xi));
  CHECK(equal(xi - xi, GeneralizedFunction::zero(unit_iv)));
}
