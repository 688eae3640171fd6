#include "opcalc/operator_polynomial.hpp"

#include "opcalc/errors.hpp"

namespace opcalc {

OperatorPolynomial operator+(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t k = 0; k < c.size(); ++k)
    c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return OperatorPolynomial(std::move(c));
}

OperatorPolynomial operator-(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t k = 0; k < c.size(); ++k)
    c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
  return OperatorPolynomial(std::move(c));
}

OperatorPolynomial operator*(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return OperatorPolynomial{};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return OperatorPolynomial(std::move(c));
}

OperatorPolynomial operator*(Complex scale, const OperatorPolynomial& a) {
  std::vector<Complex> c(a.coeffs_);
  for (auto& z : c) z *= scale;
  return OperatorPolynomial(std::move(c));
}

std::pair<OperatorPolynomial, OperatorPolynomial> divmod(const OperatorPolynomial& p,
                                                         const OperatorPolynomial& q) {
  if (q.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  const int dq = q.degree();
  if (p.degree() < dq) return {OperatorPolynomial{}, p};

  std::vector<Complex> rem(p.coefficients());
  std::vector<Complex> quot(p.degree() - dq + 1);
  const Complex lead = q.leading();
  for (int k = p.degree(); k >= dq; --k) {
    const Complex c = rem[k] / lead;
    quot[k - dq] = c;
    if (c == Complex{}) continue;
    for (int j = 0; j <= dq; ++j) rem[k - dq + j] -= c * q.coeff(j);
  }
  rem.resize(dq > 0 ? dq : 0);
  return {OperatorPolynomial(std::move(quot)), OperatorPolynomial(std::move(rem))};
}

}  // namespace opcalc
