#pragma once

#include "opcalc/cheb_function.hpp"
#include "opcalc/laurent_series.hpp"

namespace opcalc {

// Element of the fraction space over continuous functions in normal form
// s^order * body, where s is the inverse of integration from 0. Order 0 is
// an ordinary continuous function.
class MikusinskiFunction {
 public:
  MikusinskiFunction(int order, ChebFunction body);

  static MikusinskiFunction from_continuous(ChebFunction u) {
    return MikusinskiFunction(0, std::move(u));
  }
  static MikusinskiFunction zero(const Interval& interval) {
    return MikusinskiFunction(0, ChebFunction::zero(interval));
  }

  int order() const { return order_; }
  const ChebFunction& body() const { return body_; }
  const Interval& interval() const { return body_.interval(); }
  bool precise() const { return body_.precise(); }

 private:
  int order_;
  ChebFunction body_;
};

// Ratio equality: s^{n1} u1 equals s^{n2} u2 iff J^{n2}(u1) == J^{n1}(u2)
// uniformly within tolerance * (1 + norm). Functions on different intervals
// are never equal.
bool equal(const MikusinskiFunction& lhs, const MikusinskiFunction& rhs,
           double tolerance = tol::kEqual);

// c1 * w1 + c2 * w2 brought to the larger order. Throws IntervalMismatch.
MikusinskiFunction linear_combination(const MikusinskiFunction& w1,
                                      const MikusinskiFunction& w2, Complex c1,
                                      Complex c2);

MikusinskiFunction operator+(const MikusinskiFunction&, const MikusinskiFunction&);
MikusinskiFunction operator-(const MikusinskiFunction&, const MikusinskiFunction&);
MikusinskiFunction operator*(Complex, const MikusinskiFunction&);

// Scalar action of a Laurent series, factored through its valuation so the
// unit part always acts through plain integration. Zero h gives the zero
// function.
MikusinskiFunction operator*(const LaurentSeries& h, const MikusinskiFunction& w);

MikusinskiFunction integrate(const MikusinskiFunction& w);

// Canonical representative: lowers the order while the body vanishes at 0
// relative to its sup norm.
MikusinskiFunction normalize(const MikusinskiFunction& w);

}  // namespace opcalc
