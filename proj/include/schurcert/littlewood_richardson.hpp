#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <tuple>

#include "schurcert/characters.hpp"
#include "schurcert/partition.hpp"

namespace schurcert {

/// N^lambda_{mu,nu} = [Res^{S_n}_{S_i x S_{n-i}} V_lambda : V_mu ⊗ V_nu].
struct LRQuery {
  Partition lambda;
  Partition mu;
  Partition nu;
};

/// Character-method LR coefficients with an internal memo keyed by the
/// canonical (lambda, mu, nu) triple. Safe for concurrent use.
class LrCalculator {
 public:
  explicit LrCalculator(CharacterCache& characters) : characters_(characters) {}

  /// Average of chi_lambda * chi_mu * chi_nu over S_i x S_{n-i}, by cycle
  /// types. Returns 0 on a size mismatch.
  std::int64_t coefficient(const LRQuery& q);

 private:
  using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
  CharacterCache& characters_;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::int64_t> memo_;
};

LrCalculator& default_lr_calculator();

inline std::int64_t lr_coefficient(const LRQuery& q) { return default_lr_calculator().coefficient(q); }
inline std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return lr_coefficient(LRQuery{lambda, mu, nu});
}

/// Counts semistandard skew tableaux of shape lambda/mu and content nu whose
/// reverse reading word is a lattice word. Throws std::invalid_argument if
/// mu is not contained in lambda. No caching.
std::int64_t lr_by_tableaux(const LRQuery& q);
inline std::int64_t lr_by_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return lr_by_tableaux(LRQuery{lambda, mu, nu});
}

/// {mu in mu_prime + 1 : N^lambda_{mu,nu} != 0}. Requires |mu'| + |nu| + 1 = |lambda|.
PartitionSet mu_plus(const Partition& mu_prime, const Partition& nu, const Partition& lambda,
                     LrCalculator& lr = default_lr_calculator());
/// {nu' in nu + 1 : N^lambda_{mu',nu'} != 0}. Requires |mu'| + |nu| + 1 = |lambda|.
PartitionSet nu_plus(const Partition& mu_prime, const Partition& nu, const Partition& lambda,
                     LrCalculator& lr = default_lr_calculator());

}  // namespace schurcert
