#pragma once

#include <string>
#include <vector>

#include "schurcert/rational.hpp"

namespace schurcert {

/// Univariate polynomial in d with exact rational coefficients, stored in
/// ascending degree with no trailing zeros (the zero polynomial is empty).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  /// The monic linear factor d + root_shift.
  static RationalPolynomial linear(const Rational& shift);
  static RationalPolynomial constant(const Rational& c);
  /// c * d^k.
  static RationalPolynomial monomial(const Rational& c, int k);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Rational coefficient(int k) const;
  Rational operator()(const Rational& d) const;

  /// Exact division by d; throws std::domain_error if the constant term is nonzero.
  RationalPolynomial divide_by_variable() const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& scalar);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  bool operator==(const RationalPolynomial&) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

}  // namespace schurcert
