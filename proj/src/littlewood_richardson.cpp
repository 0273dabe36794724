#include "schurcert/littlewood_richardson.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace schurcert {

std::int64_t LrCalculator::coefficient(const LRQuery& q) {
  const int n = q.lambda.size();
  const int i = q.mu.size();
  if (i + q.nu.size() != n) return 0;

  Key key{q.lambda.parts(), q.mu.parts(), q.nu.parts()};
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  Rational sum = 0;
  for (const CycleType& rho : partitions_of(i)) {
    const std::int64_t chi_mu = characters_.chi(q.mu, rho);
    if (chi_mu == 0) continue;
    const Integer z_rho = centralizer_order(rho);
    for (const CycleType& kappa : partitions_of(n - i)) {
      const std::int64_t chi_nu = characters_.chi(q.nu, kappa);
      if (chi_nu == 0) continue;
      const std::int64_t chi_lambda = characters_.chi(q.lambda, merge_cycle_types(rho, kappa));
      const Integer numerator = Integer(static_cast<long>(chi_lambda)) * static_cast<long>(chi_mu) * static_cast<long>(chi_nu);
      sum += ratio(numerator, z_rho * centralizer_order(kappa));
    }
  }
  if (sum.get_den() != 1 || sum < 0)
    throw std::logic_error("LR character sum is not a nonnegative integer: " + sum.get_str());
  const std::int64_t value = to_int64(sum.get_num());

  std::unique_lock lock(mutex_);
  memo_.emplace(std::move(key), value);
  return value;
}

LrCalculator& default_lr_calculator() {
  static LrCalculator calculator(default_character_cache());
  return calculator;
}

namespace {

struct SkewFiller {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::pair<int, int>> cells;   // reading order: rows top-down, each right-to-left
  std::vector<std::vector<int>> value;      // value[r][c], 1-based; 0 = empty or inside mu
  std::vector<int> used;                    // used[v] for content letter v

  std::int64_t count(std::size_t k) {
    if (k == cells.size()) return 1;
    const auto [r, c] = cells[k];
    std::int64_t total = 0;
    const int right = c + 1 <= lambda.row(r) ? value[r][c + 1] : 0;
    const int above = (r > 1 && c > mu.row(r - 1)) ? value[r - 1][c] : 0;
    for (int v = above + 1; v <= nu.rows(); ++v) {
      if (right != 0 && v > right) break;
      if (used[v] >= nu.row(v)) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      value[r][c] = v;
      ++used[v];
      total += count(k + 1);
      --used[v];
      value[r][c] = 0;
    }
    return total;
  }
};

}  // namespace

std::int64_t lr_by_tableaux(const LRQuery& q) {
  if (!is_contained(q.mu, q.lambda))
    throw std::invalid_argument("lr_by_tableaux: " + q.mu.to_string() + " is not contained in " +
                                q.lambda.to_string());
  if (q.mu.size() + q.nu.size() != q.lambda.size()) return 0;

  SkewFiller filler{q.lambda, q.mu, q.nu, {}, {}, {}};
  filler.value.assign(static_cast<std::size_t>(q.lambda.rows()) + 1,
                      std::vector<int>(static_cast<std::size_t>(q.lambda.columns()) + 2, 0));
  filler.used.assign(static_cast<std::size_t>(q.nu.rows()) + 1, 0);
  for (int r = 1; r <= q.lambda.rows(); ++r)
    for (int c = q.lambda.row(r); c > q.mu.row(r); --c) filler.cells.emplace_back(r, c);
  return filler.count(0);
}

namespace {

void require_one_short(const Partition& mu_prime, const Partition& nu, const Partition& lambda, const char* what) {
  if (mu_prime.size() + nu.size() + 1 != lambda.size())
    throw std::invalid_argument(std::string(what) + ": need |mu'| + |nu| + 1 = |lambda|");
}

}  // namespace

PartitionSet mu_plus(const Partition& mu_prime, const Partition& nu, const Partition& lambda, LrCalculator& lr) {
  require_one_short(mu_prime, nu, lambda, "mu_plus");
  PartitionSet out;
  for (const Partition& mu : add_box(mu_prime))
    if (lr.coefficient({lambda, mu, nu}) != 0) out.insert(mu);
  return out;
}

PartitionSet nu_plus(const Partition& mu_prime, const Partition& nu, const Partition& lambda, LrCalculator& lr) {
  require_one_short(mu_prime, nu, lambda, "nu_plus");
  PartitionSet out;
  for (const Partition& nu_prime : add_box(nu))
    if (lr.coefficient({lambda, mu_prime, nu_prime}) != 0) out.insert(nu_prime);
  return out;
}

}  // namespace schurcert
