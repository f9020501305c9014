#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pathcx {

/// Univariate polynomial with integer coefficients; coeffs()[k] is the
/// coefficient of x^k. Normalized: no trailing zeros, the zero polynomial has
/// no coefficients at all.
class IntPolynomial {
 public:
  using Coeff = std::int64_t;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> coeffs);
  IntPolynomial(std::initializer_list<Coeff> coeffs) : IntPolynomial(std::vector<Coeff>(coeffs)) {}

  static IntPolynomial constant(Coeff c) { return IntPolynomial({c}); }
  static IntPolynomial x() { return IntPolynomial({0, 1}); }
  /// (1 + x)^n. Throws InputError for n < 0.
  static IntPolynomial one_plus_x_pow(int n);

  [[nodiscard]] const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k (0 beyond the degree).
  [[nodiscard]] Coeff operator[](std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : 0;
  }
  [[nodiscard]] Coeff evaluate(Coeff at) const noexcept;

  /// Multiplication by x^k.
  [[nodiscard]] IntPolynomial shifted(int k) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// `c0 + c1*x + c2*x^2 + ...` with zero terms omitted; `0` for zero.
  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();
  std::vector<Coeff> coeffs_;
};

struct DivisionResult {
  bool divisible = false;
  IntPolynomial quotient;
  /// p mod (1+x)^k, of degree < k.
  IntPolynomial remainder;
};

/// Divides p by (1+x)^k over the integers. The divisor is monic, so quotient
/// and remainder are integral.
DivisionResult poly_divisibility(const IntPolynomial& p, int k);

}  // namespace pathcx
