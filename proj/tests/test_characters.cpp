#include <doctest.h>

#include <map>
#include <thread>

#include "schurcert/characters.hpp"
#include "schurcert/group_algebra.hpp"

using namespace schurcert;

namespace {

using Monomial = std::vector<int>;

// Frobenius formula: chi_lambda(rho) is the coefficient of x^{lambda + delta}
// in a_delta * prod_k p_{rho_k}, with l = rows(lambda) variables. Monomials
// exceeding the target exponent anywhere are pruned.
std::int64_t frobenius_chi(const Partition& lambda, const Partition& rho) {
  const int l = std::max(lambda.rows(), 1);
  Monomial target(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) target[static_cast<std::size_t>(i)] = lambda.row(i + 1) + (l - 1 - i);
  auto fits = [&](const Monomial& m) {
    for (int i = 0; i < l; ++i)
      if (m[static_cast<std::size_t>(i)] > target[static_cast<std::size_t>(i)]) return false;
    return true;
  };

  std::map<Monomial, std::int64_t> poly;
  for (const Permutation& w : all_permutations(l)) {
    Monomial m(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i) m[static_cast<std::size_t>(w(i) - 1)] = l - i;
    if (fits(m)) poly[m] += w.sign();
  }
  for (int k : rho.parts()) {
    std::map<Monomial, std::int64_t> next;
    for (const auto& [m, c] : poly)
      for (int i = 0; i < l; ++i) {
        Monomial bigger = m;
        bigger[static_cast<std::size_t>(i)] += k;
        if (fits(bigger)) next[bigger] += c;
      }
    poly = std::move(next);
  }
  auto it = poly.find(target);
  return it == poly.end() ? 0 : it->second;
}

Partition hook(int m, int s) {
  std::vector<int> parts{m - s};
  parts.insert(parts.end(), static_cast<std::size_t>(s), 1);
  return Partition(parts);
}

}  // namespace

TEST_CASE("small character values") {
  CHECK(chi(Partition{2, 1}, Partition{3}) == -1);
  CHECK(chi(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(chi(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(chi(Partition{2, 2}, Partition{2, 2}) == 2);
  CHECK(chi(Partition{}, Partition{}) == 1);
  CHECK_THROWS_AS(chi(Partition{2, 1}, Partition{2}), std::invalid_argument);
}

TEST_CASE("Murnaghan-Nakayama agrees with the Frobenius formula") {
  for (int m = 1; m <= 7; ++m)
    for (const Partition& lambda : partitions_of(m))
      for (const Partition& rho : partitions_of(m)) {
        CAPTURE(lambda.to_string());
        CAPTURE(rho.to_string());
        CHECK(chi(lambda, rho) == frobenius_chi(lambda, rho));
      }
}

TEST_CASE("dimensions, class sizes and orthogonality") {
  CHECK(irrep_dimension(Partition{2, 2}) == 2);
  CHECK(irrep_dimension(Partition{3, 2, 1}) == 16);
  CHECK(centralizer_order(Partition{2, 1, 1}) == 4);
  for (int m = 1; m <= 8; ++m) {
    const CharacterTable table = character_table(m);
    Integer classes = 0;
    Integer squares = 0;
    for (const Partition& t : table.cycle_types) classes += class_size(t);
    for (const Partition& lambda : table.partitions) {
      const Integer dim(static_cast<long>(irrep_dimension(lambda)));
      squares += dim * dim;
      CHECK(chi(lambda, Partition(std::vector<int>(static_cast<std::size_t>(m), 1))) == irrep_dimension(lambda));
    }
    CHECK(classes == factorial(m));
    CHECK(squares == factorial(m));
    for (std::size_t a = 0; a < table.partitions.size(); ++a)
      for (std::size_t b = 0; b < table.partitions.size(); ++b) {
        Rational inner = 0;
        for (std::size_t k = 0; k < table.cycle_types.size(); ++k)
          inner += ratio(Integer(static_cast<long>(table.values[a][k] * table.values[b][k])),
                         centralizer_order(table.cycle_types[k]));
        CHECK(inner == (a == b ? 1 : 0));
      }
  }
}

TEST_CASE("m-cycle values vanish off hooks") {
  for (int m = 1; m <= 8; ++m)
    for (const Partition& beta : partitions_of(m)) {
      const std::int64_t value = chi(beta, Partition{m});
      if (!is_hook(beta)) {
        CHECK(value == 0);
        continue;
      }
      const int s = beta.rows() - 1;
      CHECK(beta == hook(m, s));
      CHECK(value == (s % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("branching multiplicities") {
  for (int m = 1; m <= 6; ++m)
    for (const Partition& beta : partitions_of(m))
      for (const Partition& alpha : partitions_of(m - 1))
        CHECK(branching_multiplicity(beta, alpha) == (add_box(alpha).contains(beta) ? 1 : 0));
  CHECK_THROWS_AS(branching_multiplicity(Partition{2}, Partition{2}), std::invalid_argument);
}

TEST_CASE("cache is consistent under concurrent use") {
  CharacterCache cache;
  const auto shapes = partitions_of(7);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&] {
      for (const Partition& lambda : shapes)
        for (const Partition& rho : shapes) cache.chi(lambda, rho);
    });
  for (auto& t : workers) t.join();
  CHECK(cache.size() >= shapes.size() * shapes.size());
  for (const Partition& lambda : shapes)
    for (const Partition& rho : shapes) CHECK(cache.chi(lambda, rho) == chi(lambda, rho));
}
