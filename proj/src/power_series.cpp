#include "opcalc/power_series.hpp"

#include <algorithm>
#include <cmath>

#include "opcalc/errors.hpp"

namespace opcalc {

PowerSeries::PowerSeries() : coeffs_(1) {}

PowerSeries::PowerSeries(std::vector<Complex> coeffs, int order)
    : coeffs_(std::move(coeffs)) {
  if (order <= 0) order = std::max<int>(1, static_cast<int>(coeffs_.size()));
  coeffs_.resize(order);
}

PowerSeries PowerSeries::constant(Complex value, int order) {
  std::vector<Complex> c(std::max(order, 1));
  c[0] = value;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::geometric(Complex ratio, int order) {
  std::vector<Complex> c(std::max(order, 1));
  Complex p = 1.0;
  for (auto& z : c) {
    z = p;
    p *= ratio;
  }
  return PowerSeries(std::move(c));
}

Complex PowerSeries::coeff(int k) const {
  return (k >= 0 && k < order()) ? coeffs_[k] : Complex{};
}

double PowerSeries::max_abs() const {
  double m = 0.0;
  for (const auto& z : coeffs_) m = std::max(m, std::abs(z));
  return m;
}

int PowerSeries::valuation(double relative_tolerance) const {
  const double m = max_abs();
  if (m == 0.0) return kInfiniteValuation;
  const double threshold = relative_tolerance * m;
  for (int k = 0; k < order(); ++k)
    if (std::abs(coeffs_[k]) > threshold) return k;
  return kInfiniteValuation;
}

PowerSeries PowerSeries::truncated(int order) const {
  return PowerSeries(coeffs_, std::max(order, 1));
}

PowerSeries PowerSeries::shifted_up(int count) const {
  std::vector<Complex> c(coeffs_.size() + count);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + count);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::shifted_down(int count) const {
  if (count >= order()) return PowerSeries();
  return PowerSeries(std::vector<Complex>(coeffs_.begin() + count, coeffs_.end()));
}

PowerSeries PowerSeries::inverse() const {
  const Complex c0 = coeffs_[0];
  if (std::abs(c0) <= tol::kUnit)
    throw NotAUnit("series constant term is below the unit tolerance");
  const int n = order();
  std::vector<Complex> inv(n);
  inv[0] = 1.0 / c0;
  for (int k = 1; k < n; ++k) {
    Complex acc{};
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * inv[k - j];
    inv[k] = -acc / c0;
  }
  return PowerSeries(std::move(inv));
}

PowerSeries PowerSeries::operator-() const {
  std::vector<Complex> c(coeffs_);
  for (auto& z : c) z = -z;
  return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(n);
  for (int k = 0; k < n; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(n);
  for (int k = 0; k < n; ++k) c[k] = a.coeffs_[k] - b.coeffs_[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(n);
  for (int k = 0; k < n; ++k) {
    Complex acc{};
    for (int j = 0; j <= k; ++j) acc += a.coeffs_[j] * b.coeffs_[k - j];
    c[k] = acc;
  }
  return PowerSeries(std::move(c));
}

PowerSeries operator*(Complex scale, const PowerSeries& a) {
  std::vector<Complex> c(a.coeffs_);
  for (auto& z : c) z *= scale;
  return PowerSeries(std::move(c));
}

}  // namespace opcalc
