#pragma once

#include <cmath>

#include "opcalc/errors.hpp"

namespace opcalc {

// Compact interval [a, b] with a < b and 0 inside.
class Interval {
 public:
  Interval(double a, double b) : a_(a), b_(b) {
    if (!(a < b) || !(a <= 0.0 && 0.0 <= b))
      throw InvalidInterval("interval must satisfy a < b and a <= 0 <= b");
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double length() const { return b_ - a_; }
  double radius() const { return std::max(std::abs(a_), std::abs(b_)); }

  bool contains(double x, double slack = 0.0) const {
    return x >= a_ - slack && x <= b_ + slack;
  }

  // Affine maps between [a, b] and the reference interval [-1, 1].
  double to_unit(double x) const { return (2.0 * x - a_ - b_) / (b_ - a_); }
  double from_unit(double u) const { return a_ + 0.5 * (b_ - a_) * (u + 1.0); }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

}  // namespace opcalc
