#include "schurcert/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurcert {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::linear(const Rational& shift) { return RationalPolynomial({shift, 1}); }

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int k) {
  std::vector<Rational> coefficients(static_cast<std::size_t>(k) + 1);
  coefficients.back() = c;
  return RationalPolynomial(std::move(coefficients));
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational RationalPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(k)];
}

Rational RationalPolynomial::operator()(const Rational& d) const {
  Rational value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * d + *it;
  return value;
}

RationalPolynomial RationalPolynomial::divide_by_variable() const {
  if (is_zero()) return {};
  if (coefficients_.front() != 0) throw std::domain_error("polynomial is not divisible by d");
  return RationalPolynomial(std::vector<Rational>(coefficients_.begin() + 1, coefficients_.end()));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] -= other.coefficients_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Rational magnitude = abs(c);
    if (k == 0 || magnitude != 1) s += magnitude.get_str() + (k > 0 ? "*" : "");
    if (k >= 1) s += "d";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace schurcert
