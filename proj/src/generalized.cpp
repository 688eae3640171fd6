#include "opcalc/generalized.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "opcalc/errors.hpp"

namespace opcalc {
namespace {

// Power-basis coefficients (in the mapped variable) of sum c_k T_k, built
// with the recurrence T_{k+1} = 2 x T_k - T_{k-1}. The entries of T_k grow
// like (1 + sqrt 2)^k, which is why callers cap the degree.
std::vector<Complex> to_power_basis(const std::vector<Complex>& c, int count) {
  std::vector<Complex> p(count);
  std::vector<double> prev{1.0};  // T_0
  std::vector<double> cur{0.0, 1.0};  // T_1
  p[0] = c[0];
  if (count > 1) p[1] += c[1];
  for (int k = 2; k < count; ++k) {
    std::vector<double> next(k + 1, 0.0);
    for (int j = 0; j < k; ++j) next[j + 1] += 2.0 * cur[j];
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    for (int j = 0; j <= k; ++j)
      if (next[j] != 0.0) p[j] += c[k] * next[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return p;
}

// Index just past the last coefficient that can matter at the given
// threshold; trailing entries this small cannot push any re-expanded
// coefficient across it.
int significant_count(const std::vector<Complex>& c, double drop) {
  int n = static_cast<int>(c.size());
  while (n > 1 && std::abs(c[n - 1]) <= drop) --n;
  return n;
}

}  // namespace

bool represents_zero(const MikusinskiFunction& w, double tolerance) {
  const ChebFunction& v = w.body();
  const double scale = v.norm_inf();
  if (scale == 0.0) return true;
  const double threshold = tolerance * scale;

  const auto& c = v.coefficients();
  const int count = significant_count(c, threshold / (4.0 * c.size()));

  if (count - 1 <= tol::kMembershipDegreeCap) {
    const std::vector<Complex> p = to_power_basis(c, count);
    for (int k = w.order(); k < count; ++k)
      if (std::abs(p[k]) > threshold) return false;
    return true;
  }

  // Too wide for a safe re-expansion: reduce the order first, then use the
  // degree grading of the Chebyshev basis itself.
  const MikusinskiFunction reduced = normalize(w);
  const auto& rc = reduced.body().coefficients();
  const double rscale = reduced.body().norm_inf();
  if (rscale == 0.0) return true;
  for (int k = reduced.order(); k < static_cast<int>(rc.size()); ++k)
    if (std::abs(rc[k]) > tolerance * rscale) return false;
  return true;
}

bool equal(const GeneralizedFunction& lhs, const GeneralizedFunction& rhs,
           double tolerance) {
  if (!(lhs.interval() == rhs.interval()))
    throw IntervalMismatch("operands live on different intervals");
  const MikusinskiFunction& r1 = lhs.representative();
  const MikusinskiFunction& r2 = rhs.representative();
  // Equality in the function space is finer than equality of classes, and
  // its absolute floor also settles differences that are pure noise.
  if (equal(r1, r2, tolerance)) return true;
  if (represents_zero(linear_combination(r1, r2, 1.0, -1.0), tolerance)) return true;
  const MikusinskiFunction n1 = normalize(r1);
  const MikusinskiFunction n2 = normalize(r2);
  if (equal(n1, n2, tolerance)) return true;
  return represents_zero(linear_combination(n1, n2, 1.0, -1.0), tolerance);
}

GeneralizedFunction derivative(const GeneralizedFunction& xi, int count) {
  return GeneralizedFunction(LaurentSeries::t_power(-count) * xi.representative());
}

std::optional<ChebFunction> materialize(const GeneralizedFunction& xi,
                                        double tolerance) {
  const MikusinskiFunction& rep = xi.representative();
  ChebFunction u = rep.body();
  for (int i = 0; i < rep.order(); ++i) u = u.derivative();
  if (equal(xi, GeneralizedFunction::from_continuous(u), tolerance)) return u;
  return std::nullopt;
}

GeneralizedFunction operator+(const GeneralizedFunction& a, const GeneralizedFunction& b) {
  return GeneralizedFunction(
      linear_combination(a.representative(), b.representative(), 1.0, 1.0));
}

GeneralizedFunction operator-(const GeneralizedFunction& a, const GeneralizedFunction& b) {
  return GeneralizedFunction(
      linear_combination(a.representative(), b.representative(), 1.0, -1.0));
}

GeneralizedFunction operator*(Complex c, const GeneralizedFunction& xi) {
  return GeneralizedFunction(c * xi.representative());
}

}  // namespace opcalc
