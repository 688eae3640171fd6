#pragma once

#include <optional>

#include "opcalc/mikusinski.hpp"

namespace opcalc {

// Whether w = s^m v lies in the null class of generalized functions, i.e.
// whether v is within tolerance a polynomial of degree <= m - 1 (and v ~ 0
// when m == 0). Decided by re-expanding the significant part of v in the
// power basis; representatives whose significant degree exceeds the safe
// conversion cap are normalized first and then tested directly on their
// Chebyshev coefficients (T_0..T_{m-1} spans the same polynomials).
bool represents_zero(const MikusinskiFunction& w, double tolerance = tol::kMembership);

// Equivalence class of a MikusinskiFunction modulo the null classes above.
class GeneralizedFunction {
 public:
  explicit GeneralizedFunction(MikusinskiFunction rep) : rep_(std::move(rep)) {}

  static GeneralizedFunction from_continuous(ChebFunction u) {
    return GeneralizedFunction(MikusinskiFunction::from_continuous(std::move(u)));
  }
  static GeneralizedFunction zero(const Interval& interval) {
    return GeneralizedFunction(MikusinskiFunction::zero(interval));
  }

  const MikusinskiFunction& representative() const { return rep_; }
  const Interval& interval() const { return rep_.interval(); }
  bool precise() const { return rep_.precise(); }

 private:
  MikusinskiFunction rep_;
};

// Class equality: the difference of representatives must represent zero.
// Tries the direct difference first and falls back to normalized
// representatives. Throws IntervalMismatch.
bool equal(const GeneralizedFunction& lhs, const GeneralizedFunction& rhs,
           double tolerance = tol::kMembership);

// count-th distributional derivative: multiplication by s^count.
GeneralizedFunction derivative(const GeneralizedFunction& xi, int count = 1);

// The continuous function equal to xi, when one exists within tolerance.
std::optional<ChebFunction> materialize(const GeneralizedFunction& xi,
                                        double tolerance = tol::kMembership);

GeneralizedFunction operator+(const GeneralizedFunction&, const GeneralizedFunction&);
GeneralizedFunction operator-(const GeneralizedFunction&, const GeneralizedFunction&);
GeneralizedFunction operator*(Complex, const GeneralizedFunction&);

}  // namespace opcalc
