#include <cmath>
#include <vector>

#include "opcalc/cheb_function.hpp"
#include "opcalc/tolerances.hpp"

namespace opcalc {
namespace {

// Sup-norm bound for the k-th term relative to |u|: |g_k| L^k / k! with
// L the interval radius. The common factor |u| cancels against the
// tolerance, which is also relative to |u|.
std::vector<double> term_bounds(const PowerSeries& g, double radius) {
  std::vector<double> bound(g.order());
  double weight = 1.0;
  for (int k = 0; k < g.order(); ++k) {
    bound[k] = std::abs(g.coeff(k)) * weight;
    weight *= radius / (k + 1);
  }
  return bound;
}

}  // namespace

ChebFunction apply_series(const PowerSeries& g, const ChebFunction& u) {
  const int n = g.order();
  const std::vector<double> bound = term_bounds(g, u.interval().radius());

  std::vector<double> tail(n + 1, 0.0);
  for (int k = n - 1; k >= 0; --k) tail[k] = tail[k + 1] + bound[k];

  int terms = 0;
  while (terms < n && tail[terms] >= tol::kTail) ++terms;
  // Terms at the truncation order still above the threshold mean the cutoff
  // cannot be certified from the coefficients we hold.
  const bool hot_wall = n > 0 && bound[n - 1] >= tol::kTail;

  ChebFunction acc = ChebFunction::zero(u.interval());
  ChebFunction integral = u;
  for (int k = 0; k < terms; ++k) {
    if (std::abs(g.coeff(k)) != 0.0) acc = acc + g.coeff(k) * integral;
    if (k + 1 < terms) integral = integral.antiderivative();
  }
  if (!u.precise() || hot_wall) acc = acc.marked_imprecise();
  return acc;
}

ChebFunction borel_sum(const PowerSeries& g, const Interval& interval) {
  const int n = g.order();
  std::vector<Complex> taylor(n);
  double factorial = 1.0;
  for (int k = 0; k < n; ++k) {
    taylor[k] = g.coeff(k) / factorial;
    factorial *= (k + 1);
  }
  const auto eval = [&taylor](double x) {
    Complex acc{};
    for (size_t k = taylor.size(); k-- > 0;) acc = acc * x + taylor[k];
    return acc;
  };
  ChebFunction out = ChebFunction::interpolate(eval, interval, tol::kTrim);

  const std::vector<double> bound = term_bounds(g, interval.radius());
  if (n > 0 && bound[n - 1] >= tol::kTail) out = out.marked_imprecise();
  return out;
}

}  // namespace opcalc
