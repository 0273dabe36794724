#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "schurcert/partition.hpp"
#include "schurcert/rational.hpp"

namespace schurcert {

/// A conjugacy class of S_m, recorded by its cycle lengths.
using CycleType = Partition;

/// Memo table for irreducible characters. Lookups and inserts are safe from
/// any number of threads; inserts are idempotent.
class CharacterCache {
 public:
  /// chi_beta on the class of cycle type `type`. Throws std::invalid_argument
  /// if the sizes differ.
  std::int64_t chi(const Partition& beta, const CycleType& type);

  std::size_t size() const;

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::int64_t compute(const Partition& beta, const CycleType& type);

  mutable std::shared_mutex mutex_;
  std::map<Key, std::int64_t> memo_;
};

/// Process-wide cache used by the free functions below.
CharacterCache& default_character_cache();

inline std::int64_t chi(const Partition& beta, const CycleType& type) {
  return default_character_cache().chi(beta, type);
}

/// m! / prod(hook lengths).
std::int64_t irrep_dimension(const Partition& beta);

/// z_t = prod_k k^{a_k} a_k!, the centralizer order.
Integer centralizer_order(const CycleType& type);
/// m! / z_t.
Integer class_size(const CycleType& type);

/// (1/(m-1)!) sum_{tau in S_{m-1}} chi_alpha(tau) chi_beta(tau^-1), evaluated
/// over cycle types. Throws std::invalid_argument unless |beta| = |alpha| + 1.
std::int64_t branching_multiplicity(const Partition& beta, const Partition& alpha,
                                    CharacterCache& cache = default_character_cache());

/// Cycle type of sigma x tau in S_{i} x S_{n-i}, i.e. the merged part list.
CycleType merge_cycle_types(const CycleType& a, const CycleType& b);

struct CharacterTable {
  int degree = 0;
  std::vector<Partition> partitions;   // rows
  std::vector<CycleType> cycle_types;  // columns
  std::vector<std::vector<std::int64_t>> values;
};

CharacterTable character_table(int m);

}  // namespace schurcert
