#include "opcalc/cheb_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "opcalc/errors.hpp"
#include "opcalc/tolerances.hpp"

namespace opcalc {
namespace {

std::vector<Complex> trimmed(std::vector<Complex> c) {
  double m = 0.0;
  for (const auto& z : c) m = std::max(m, std::abs(z));
  size_t keep = c.size();
  while (keep > 1 && std::abs(c[keep - 1]) <= tol::kTrim * m) --keep;
  c.resize(std::max<size_t>(keep, 1));
  return c;
}

Complex clenshaw(const std::vector<Complex>& c, double xi) {
  Complex b1{}, b2{};
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
    const Complex next = 2.0 * xi * b1 - b2 + c[k];
    b2 = b1;
    b1 = next;
  }
  return xi * b1 - b2 + c[0];
}

}  // namespace

ChebFunction::ChebFunction(Interval interval, std::vector<Complex> coeffs, bool precise)
    : interval_(interval), coeffs_(trimmed(std::move(coeffs))), precise_(precise) {
  if (coeffs_.empty()) coeffs_.assign(1, Complex{});
}

ChebFunction ChebFunction::zero(const Interval& interval) {
  return ChebFunction(interval, {Complex{}});
}

ChebFunction ChebFunction::constant(const Interval& interval, Complex value) {
  return ChebFunction(interval, {value});
}

ChebFunction ChebFunction::identity(const Interval& interval) {
  // x = midpoint + half-length * T_1 over the mapped interval
  return ChebFunction(interval, {Complex(0.5 * (interval.a() + interval.b())),
                                 Complex(0.5 * interval.length())});
}

ChebFunction ChebFunction::marked_imprecise() const {
  ChebFunction out(*this);
  out.precise_ = false;
  return out;
}

ChebFunction ChebFunction::interpolate(const std::function<Complex(double)>& f,
                                       const Interval& interval, double tolerance) {
  for (int n = 16;; n *= 2) {
    // cos(pi j k / n) is periodic in j k mod 2n, so one table per level
    // serves the whole projection.
    std::vector<double> cosv(2 * n);
    for (int m = 0; m < 2 * n; ++m) cosv[m] = std::cos(std::numbers::pi * m / n);

    std::vector<Complex> vals(n + 1);
    for (int k = 0; k <= n; ++k) vals[k] = f(interval.from_unit(cosv[k]));

    // Discrete cosine projection on the extrema grid; endpoint samples and
    // endpoint coefficients carry a half weight.
    std::vector<Complex> c(n + 1);
    for (int j = 0; j <= n; ++j) {
      Complex acc = 0.5 * (vals[0] + (j % 2 == 0 ? vals[n] : -vals[n]));
      for (int k = 1; k < n; ++k)
        acc += vals[k] * cosv[static_cast<long long>(j) * k % (2LL * n)];
      c[j] = acc * (2.0 / n);
      if (j == 0 || j == n) c[j] *= 0.5;
    }

    double maxc = 0.0;
    for (const auto& z : c) maxc = std::max(maxc, std::abs(z));
    if (maxc == 0.0) return ChebFunction(interval, {Complex{}});

    double tail = 0.0;
    for (int j = (3 * n) / 4; j <= n; ++j) tail = std::max(tail, std::abs(c[j]));
    if (tail <= tolerance * maxc) return ChebFunction(interval, std::move(c));
    if (2 * n > tol::kMaxInterpPoints)
      return ChebFunction(interval, std::move(c), /*precise=*/false);
  }
}

Complex ChebFunction::operator()(double x) const {
  const double slack = 1e-12 * interval_.length();
  if (!interval_.contains(x, slack))
    throw OutOfDomain("evaluation point outside the function's interval");
  const double xi = std::clamp(interval_.to_unit(x), -1.0, 1.0);
  return clenshaw(coeffs_, xi);
}

ChebFunction ChebFunction::antiderivative() const {
  const int n = size();
  const double scale = 0.5 * interval_.length();
  std::vector<Complex> b(n + 1);
  for (int j = 1; j <= n; ++j) {
    const Complex low = (j == 1) ? 2.0 * coeffs_[0] : coeffs_[j - 1];
    const Complex high = (j + 1 < n) ? coeffs_[j + 1] : Complex{};
    b[j] = scale * (low - high) / (2.0 * j);
  }
  // Pin the integration constant so the result vanishes at x = 0.
  b[0] = -clenshaw(b, interval_.to_unit(0.0));
  return ChebFunction(interval_, std::move(b), precise_);
}

ChebFunction ChebFunction::derivative() const {
  const int n = size();
  if (n <= 1) return ChebFunction(interval_, {Complex{}}, precise_);
  std::vector<Complex> d(n - 1);
  for (int k = n - 1; k >= 1; --k) {
    const Complex above = (k + 1 <= n - 2) ? d[k + 1] : Complex{};
    d[k - 1] = above + 2.0 * k * coeffs_[k];
  }
  d[0] *= 0.5;
  const double scale = 2.0 / interval_.length();
  for (auto& z : d) z *= scale;
  return ChebFunction(interval_, std::move(d), precise_);
}

double ChebFunction::norm_inf() const {
  const int m = std::clamp(2 * size() + 1, 65, 4097);
  double best = 0.0;
  for (int j = 0; j < m; ++j) {
    const double xi = std::cos(std::numbers::pi * j / (m - 1));
    best = std::max(best, std::abs(clenshaw(coeffs_, xi)));
  }
  return best;
}

double ChebFunction::coeff_sum() const {
  double s = 0.0;
  for (const auto& z : coeffs_) s += std::abs(z);
  return s;
}

ChebFunction ChebFunction::operator-() const {
  std::vector<Complex> c(coeffs_);
  for (auto& z : c) z = -z;
  return ChebFunction(interval_, std::move(c), precise_);
}

ChebFunction operator+(const ChebFunction& u, const ChebFunction& v) {
  if (!(u.interval_ == v.interval_))
    throw IntervalMismatch("operands live on different intervals");
  std::vector<Complex> c(std::max(u.coeffs_.size(), v.coeffs_.size()));
  for (size_t k = 0; k < c.size(); ++k) {
    if (k < u.coeffs_.size()) c[k] += u.coeffs_[k];
    if (k < v.coeffs_.size()) c[k] += v.coeffs_[k];
  }
  return ChebFunction(u.interval_, std::move(c), u.precise_ && v.precise_);
}

ChebFunction operator-(const ChebFunction& u, const ChebFunction& v) { return u + (-v); }

ChebFunction operator*(Complex scale, const ChebFunction& u) {
  std::vector<Complex> c(u.coeffs_);
  for (auto& z : c) z *= scale;
  return ChebFunction(u.interval_, std::move(c), u.precise_);
}

ChebFunction iterated_antiderivative(ChebFunction u, int count) {
  for (int i = 0; i < count; ++i) u = u.antiderivative();
  return u;
}

}  // namespace opcalc
