#include "pathcx/polynomial.hpp"

#include <sstream>

#include "pathcx/errors.hpp"

namespace pathcx {

IntPolynomial::IntPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one_plus_x_pow(int n) {
  if (n < 0) throw InputError("exponent must be nonnegative");
  std::vector<Coeff> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int row = 1; row <= n; ++row) {
    for (int k = row; k > 0; --k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k) - 1];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial::Coeff IntPolynomial::evaluate(Coeff at) const noexcept {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<Coeff> c(static_cast<std::size_t>(k), 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<IntPolynomial::Coeff> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<IntPolynomial::Coeff> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPolynomial::Coeff> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << coeffs_[k];
    if (k == 1) out << "*x";
    if (k > 1) out << "*x^" << k;
  }
  return out.str();
}

DivisionResult poly_divisibility(const IntPolynomial& p, int k) {
  const IntPolynomial divisor = IntPolynomial::one_plus_x_pow(k);
  std::vector<IntPolynomial::Coeff> rem = p.coeffs();
  const int dd = divisor.degree();
  std::vector<IntPolynomial::Coeff> quot(rem.size() > static_cast<std::size_t>(dd) ? rem.size() - static_cast<std::size_t>(dd) : 0, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    const auto lead = rem[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    const auto shift = static_cast<std::size_t>(i - dd);
    quot[shift] = lead;
    for (int j = 0; j <= dd; ++j) rem[shift + static_cast<std::size_t>(j)] -= lead * divisor[static_cast<std::size_t>(j)];
  }
  DivisionResult r;
  r.quotient = IntPolynomial(std::move(quot));
  r.remainder = IntPolynomial(std::move(rem));
  r.divisible = r.remainder.is_zero();
  return r;
}

}  // namespace pathcx
