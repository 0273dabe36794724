#include "schurcert/characters.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

namespace schurcert {

namespace {

// Beta-numbers lambda_i + (p - i) of a partition with p rows.
std::vector<int> beta_numbers(const Partition& lambda) {
  std::vector<int> out;
  const int p = lambda.rows();
  for (int i = 1; i <= p; ++i) out.push_back(lambda.row(i) + p - i);
  return out;
}

Partition from_beta_numbers(std::vector<int> beads) {
  std::sort(beads.rbegin(), beads.rend());
  const int p = static_cast<int>(beads.size());
  std::vector<int> parts;
  for (int i = 1; i <= p; ++i) parts.push_back(beads[static_cast<std::size_t>(i - 1)] - (p - i));
  return Partition(std::move(parts));
}

}  // namespace

std::int64_t CharacterCache::chi(const Partition& beta, const CycleType& type) {
  if (beta.size() != type.size())
    throw std::invalid_argument("chi: partition " + beta.to_string() + " and cycle type " + type.to_string() +
                                " have different sizes");
  if (beta.size() == 0) return 1;
  Key key{beta.parts(), type.parts()};
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const std::int64_t value = compute(beta, type);
  std::unique_lock lock(mutex_);
  memo_.emplace(std::move(key), value);
  return value;
}

std::size_t CharacterCache::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

// Murnaghan-Nakayama: strip rim hooks of length type[0] by sliding a bead
// down k positions on the abacus; the sign counts beads jumped over.
std::int64_t CharacterCache::compute(const Partition& beta, const CycleType& type) {
  const int k = type.row(1);
  std::vector<int> rest(type.parts().begin() + 1, type.parts().end());
  const CycleType remaining(std::move(rest));

  const std::vector<int> beads = beta_numbers(beta);
  const std::set<int> occupied(beads.begin(), beads.end());
  std::int64_t total = 0;
  for (std::size_t idx = 0; idx < beads.size(); ++idx) {
    const int x = beads[idx];
    const int target = x - k;
    if (target < 0 || occupied.contains(target)) continue;
    int jumped = 0;
    for (int y : beads)
      if (y > target && y < x) ++jumped;
    std::vector<int> moved = beads;
    moved[idx] = target;
    const std::int64_t sub = chi(from_beta_numbers(std::move(moved)), remaining);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

CharacterCache& default_character_cache() {
  static CharacterCache cache;
  return cache;
}

std::int64_t irrep_dimension(const Partition& beta) {
  const Partition conj = conjugate(beta);
  Integer hooks = 1;
  for (const Box& b : boxes(beta)) {
    const int arm = beta.row(b.row) - b.col;
    const int leg = conj.row(b.col) - b.row;
    hooks *= arm + leg + 1;
  }
  return to_int64(factorial(beta.size()) / hooks);
}

Integer centralizer_order(const CycleType& type) {
  Integer z = 1;
  const auto& parts = type.parts();
  for (std::size_t start = 0; start < parts.size();) {
    std::size_t end = start;
    while (end < parts.size() && parts[end] == parts[start]) ++end;
    const int multiplicity = static_cast<int>(end - start);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[start]),
                  static_cast<unsigned long>(multiplicity));
    z *= power * factorial(multiplicity);
    start = end;
  }
  return z;
}

Integer class_size(const CycleType& type) { return factorial(type.size()) / centralizer_order(type); }

CycleType merge_cycle_types(const CycleType& a, const CycleType& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.rbegin(), parts.rend());
  return CycleType(std::move(parts));
}

std::int64_t branching_multiplicity(const Partition& beta, const Partition& alpha, CharacterCache& cache) {
  if (beta.size() != alpha.size() + 1)
    throw std::invalid_argument("branching_multiplicity: |beta| must equal |alpha| + 1");
  Rational sum = 0;
  for (const CycleType& t : partitions_of(alpha.size())) {
    const CycleType lifted = merge_cycle_types(t, CycleType{1});
    const long product = static_cast<long>(cache.chi(alpha, t) * cache.chi(beta, lifted));
    sum += ratio(Integer(product), centralizer_order(t));
  }
  if (sum.get_den() != 1) throw std::logic_error("branching multiplicity is not an integer");
  return to_int64(sum.get_num());
}

CharacterTable character_table(int m) {
  CharacterTable table;
  table.degree = m;
  table.partitions = partitions_of(m);
  table.cycle_types = partitions_of(m);
  for (const Partition& beta : table.partitions) {
    std::vector<std::int64_t> row;
    for (const CycleType& t : table.cycle_types) row.push_back(chi(beta, t));
    table.values.push_back(std::move(row));
  }
  return table;
}

}  // namespace schurcert
