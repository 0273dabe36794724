#include "schurcert/trace_polynomials.hpp"

#include <stdexcept>

#include "schurcert/characters.hpp"

namespace schurcert {

namespace {

void require_nonempty(const Partition& beta, const char* what) {
  if (beta.size() < 1) throw std::invalid_argument(std::string(what) + ": beta must have at least one box");
}

void require_added_box(const Partition& alpha, const Partition& beta) {
  if (!add_box(alpha).contains(beta))
    throw std::invalid_argument(beta.to_string() + " is not obtained from " + alpha.to_string() +
                                " by adding one box");
}

}  // namespace

RationalPolynomial content_polynomial(const Partition& beta) {
  RationalPolynomial cp = RationalPolynomial::constant(1);
  for (int c : contents(beta)) cp = cp * RationalPolynomial::linear(c);
  return cp;
}

RationalPolynomial p_closed(const Partition& beta) {
  require_nonempty(beta, "p_closed");
  return ratio(1, factorial(beta.size())) * content_polynomial(beta).divide_by_variable();
}

RationalPolynomial p_charsum(const Partition& beta) {
  require_nonempty(beta, "p_charsum");
  const int m = beta.size();
  RationalPolynomial sum;
  for (const CycleType& t : partitions_of(m)) {
    const Rational weight = Rational(class_size(t)) * Rational(Integer(static_cast<long>(chi(beta, t))));
    sum += RationalPolynomial::monomial(weight, t.rows() - 1);
  }
  return ratio(1, factorial(m) * Integer(static_cast<long>(irrep_dimension(beta)))) * sum;
}

RationalPolynomial partial_trace_polynomial(const GroupAlgebraElement& x) {
  RationalPolynomial sum;
  for (const auto& [sigma, f] : x.terms()) sum += RationalPolynomial::monomial(f, sigma.cycle_count() - 1);
  return sum;
}

RationalPolynomial p_bruteforce(const Partition& alpha, const Partition& beta, const ProductLimits& limits) {
  require_added_box(alpha, beta);
  const GroupAlgebraElement e_alpha = embed_fixing_first(central_idempotent(alpha, 0, limits));
  const GroupAlgebraElement e_beta = central_idempotent(beta, 0, limits);
  const GroupAlgebraElement product = multiply(e_alpha, e_beta, limits);
  const Integer dims = Integer(static_cast<long>(irrep_dimension(alpha))) * static_cast<long>(irrep_dimension(beta));
  return ratio(1, dims) * partial_trace_polynomial(product);
}

RationalPolynomial young_trace_polynomial(const Partition& alpha, const Partition& beta,
                                          const ProductLimits& limits) {
  require_added_box(alpha, beta);
  const int m = beta.size();
  const GroupAlgebraElement c_alpha = young_symmetrizer(YoungTableau::canonical(alpha).shifted(1), m);
  const GroupAlgebraElement c_beta = young_symmetrizer(YoungTableau::canonical(beta), m);
  return partial_trace_polynomial(multiply(c_alpha, c_beta, limits));
}

std::set<int> root_set(const Partition& beta) {
  std::set<int> out;
  for (int x = 1 - beta.columns(); x <= beta.rows() - 1; ++x) out.insert(x);
  if (is_hook(beta)) out.erase(0);
  return out;
}

}  // namespace schurcert
