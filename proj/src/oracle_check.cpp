#include "schurcert/oracle_check.hpp"

#include <functional>

#include "schurcert/characters.hpp"
#include "schurcert/trace_polynomials.hpp"

namespace schurcert {

namespace {

constexpr std::size_t kMaxReported = 5;

std::string space_name(const SuperSpace& v) { return "(" + std::to_string(v.even) + "|" + std::to_string(v.odd) + ")"; }

Rational power(const Rational& base, int exponent) {
  Rational out = 1;
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

class RowBuilder {
 public:
  explicit RowBuilder(std::string name) { row_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++row_.cases;
    if (ok) return;
    row_.passed = false;
    if (row_.failures.size() < kMaxReported) row_.failures.push_back(describe());
  }

  OracleCheckRow take() { return std::move(row_); }

 private:
  OracleCheckRow row_;
};

std::vector<SuperSpace> spaces(int max_total_dim) {
  std::vector<SuperSpace> out;
  for (int total = 1; total <= max_total_dim; ++total)
    for (int r = total; r >= 0; --r) out.push_back({r, total - r});
  return out;
}

bool fits(const SuperSpace& v, int m, const OracleLimits& limits) {
  std::size_t n = 1;
  for (int k = 0; k < m; ++k) {
    n *= static_cast<std::size_t>(v.total());
    if (n > limits.max_dimension) return false;
  }
  return true;
}

}  // namespace

std::vector<OracleCheckRow> run_oracle_checks(const OracleCheckOptions& options) {
  const std::vector<SuperSpace> vs = spaces(options.max_total_dim);
  std::vector<OracleCheckRow> rows;

  RowBuilder traces("partial_trace_cycles");
  for (int m = 1; m <= options.max_m; ++m)
    for (const SuperSpace& v : vs) {
      if (!fits(v, m, options.limits)) continue;
      for (const Permutation& sigma : all_permutations(m)) {
        const GradedMatrix traced = partial_trace_last(permutation_action(sigma, v, options.limits), v, m);
        const auto scalar = traced.scalar_of_identity();
        const Rational expected = power(Rational(v.superdimension()), sigma.cycle_count() - 1);
        traces.check(scalar && *scalar == expected, [&] {
          return "m=" + std::to_string(m) + " v=" + space_name(v) + " cycle type " + sigma.cycle_type().to_string();
        });
      }
    }
  rows.push_back(traces.take());

  RowBuilder vanishing("schur_rank_vanishing");
  RowBuilder superdim("superdimension");
  RowBuilder conjugate_rank("conjugate_rank");
  for (int n = 1; n <= options.max_m; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (const SuperSpace& v : vs) {
        if (!fits(v, n, options.limits)) continue;
        const SchurRank rank = schur_rank(lambda, v, options.limits);
        const auto label = [&] { return lambda.to_string() + " on " + space_name(v); };
        vanishing.check((rank.total == 0) == contains_box(lambda, v.even + 1, v.odd + 1), label);
        const Rational expected = ratio(Integer(static_cast<long>(irrep_dimension(lambda))), factorial(n)) *
                                  content_polynomial(lambda)(Rational(v.superdimension()));
        superdim.check(Rational(static_cast<long>(rank.even) - static_cast<long>(rank.odd)) == expected, label);
        const SchurRank flipped = schur_rank(conjugate(lambda), SuperSpace{v.odd, v.even}, options.limits);
        conjugate_rank.check(flipped.total == rank.total, label);
      }
  rows.push_back(vanishing.take());
  rows.push_back(superdim.take());
  rows.push_back(conjugate_rank.take());

  RowBuilder scalars("p_scalar");
  for (int m = 1; m <= options.max_m; ++m) {
    if (m > options.limits.products.max_degree) break;
    for (const Partition& beta : partitions_of(m)) {
      const RationalPolynomial p = p_charsum(beta);
      for (const Partition& alpha : remove_boxes(beta, 1))
        for (const SuperSpace& v : vs) {
          if (!fits(v, m, options.limits)) continue;
          bool ok = false;
          try {
            ok = measure_p_scalar(alpha, beta, v, options.limits) == p(Rational(v.superdimension()));
          } catch (const NonScalarTrace&) {
            ok = false;
          }
          scalars.check(ok, [&] { return alpha.to_string() + " < " + beta.to_string() + " on " + space_name(v); });
        }
    }
  }
  rows.push_back(scalars.take());
  return rows;
}

}  // namespace schurcert
