#pragma once

#include <utility>
#include <vector>

#include "opcalc/types.hpp"

namespace opcalc {

// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kZeroPolyDegree = -1;

// Polynomial in the differentiation symbol s, coefficients ascending by
// power. Exactly-zero trailing coefficients are trimmed on construction.
class OperatorPolynomial {
 public:
  OperatorPolynomial() = default;  // zero polynomial
  explicit OperatorPolynomial(std::vector<Complex> coeffs)
      : coeffs_(std::move(coeffs)) {
    trim();
  }

  static OperatorPolynomial monomial(int degree, Complex scale = 1.0) {
    std::vector<Complex> c(degree + 1);
    c[degree] = scale;
    return OperatorPolynomial(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Complex{};
  }
  Complex leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }
  const std::vector<Complex>& coefficients() const { return coeffs_; }

  Complex operator()(Complex s) const {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
  }

  friend OperatorPolynomial operator+(const OperatorPolynomial&, const OperatorPolynomial&);
  friend OperatorPolynomial operator-(const OperatorPolynomial&, const OperatorPolynomial&);
  friend OperatorPolynomial operator*(const OperatorPolynomial&, const OperatorPolynomial&);
  friend OperatorPolynomial operator*(Complex, const OperatorPolynomial&);

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
  }

  std::vector<Complex> coeffs_;
};

// Euclidean division: p = quotient * q + remainder with
// deg remainder < deg q. Throws ZeroPolynomial when q is zero.
std::pair<OperatorPolynomial, OperatorPolynomial> divmod(const OperatorPolynomial& p,
                                                         const OperatorPolynomial& q);

}  // namespace opcalc
