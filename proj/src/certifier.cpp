#include "schurcert/certifier.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "schurcert/characters.hpp"
#include "schurcert/trace_polynomials.hpp"

namespace schurcert {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; static_cast<long>(k) * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

Field::Field(int characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw std::invalid_argument("characteristic must be 0 or a prime, got " + std::to_string(characteristic));
}

long Field::reduce(long x) const {
  if (characteristic_ == 0) return x;
  const long r = x % characteristic_;
  return r < 0 ? r + characteristic_ : r;
}

bool Field::contains(const std::set<int>& values, long x) const {
  const long target = reduce(x);
  return std::any_of(values.begin(), values.end(), [&](int v) { return reduce(v) == target; });
}

namespace {

constexpr std::pair<WitnessSource, const char*> kSourceNames[] = {
    {WitnessSource::generic, "generic"},
    {WitnessSource::general, "general"},
    {WitnessSource::non_rectangle, "non_rectangle"},
    {WitnessSource::non_rectangle_conjugate, "non_rectangle_conjugate"},
    {WitnessSource::no_box_3_2, "no_box_3_2"},
    {WitnessSource::no_box_2_3, "no_box_2_3"},
    {WitnessSource::hook, "hook"},
    {WitnessSource::exhaustive_search, "exhaustive_search"},
};

constexpr std::pair<CounterexampleFamily, const char*> kFamilyNames[] = {
    {CounterexampleFamily::super, "super"},
    {CounterexampleFamily::rectangle_top, "rectangle_top"},
    {CounterexampleFamily::rectangle_bottom_twist, "rectangle_bottom_twist"},
};

}  // namespace

std::string to_string(WitnessSource source) {
  for (const auto& [value, name] : kSourceNames)
    if (value == source) return name;
  throw std::logic_error("unknown witness source");
}

WitnessSource witness_source_from_string(const std::string& name) {
  for (const auto& [value, text] : kSourceNames)
    if (name == text) return value;
  throw std::invalid_argument("unknown witness source '" + name + "'");
}

std::string to_string(CounterexampleFamily family) {
  for (const auto& [value, name] : kFamilyNames)
    if (value == family) return name;
  throw std::logic_error("unknown counterexample family");
}

CounterexampleFamily counterexample_family_from_string(const std::string& name) {
  for (const auto& [value, text] : kFamilyNames)
    if (name == text) return value;
  throw std::invalid_argument("unknown counterexample family '" + name + "'");
}

bool Certificate::uses_search() const {
  return std::any_of(branches.begin(), branches.end(),
                     [](const auto& entry) { return entry.second.source == WitnessSource::exhaustive_search; });
}

bool in_f_set(const Partition& lambda, long d, const Field& field) { return field.contains(f_set(lambda), d); }

Witness generic_witness(const Partition& lambda) {
  Witness w;
  w.i = 1;
  w.mu_prime = Partition{};
  w.mu = Partition{1};
  w.nu = *remove_boxes(lambda, 1).begin();
  w.nu_prime = lambda;
  w.a_forbidden = root_set(w.mu);
  w.b_forbidden = root_set(w.nu_prime);
  w.source = WitnessSource::generic;
  return w;
}

namespace {

struct Candidate {
  Partition mu_prime;
  Partition nu;
  Partition mu;
  Partition nu_prime;
};

// Rows from..to of lambda (1-based, inclusive).
std::vector<int> rows_of(const Partition& lambda, int from, int to) {
  std::vector<int> out;
  for (int k = from; k <= to; ++k) out.push_back(lambda.row(k));
  return out;
}

std::vector<int> drop_last_box(std::vector<int> parts) {
  if (!parts.empty()) --parts.back();
  return parts;
}

std::vector<int> ones(int count) { return std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), 1); }

std::vector<int> concat(std::vector<int> head, const std::vector<int>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

Candidate make(const std::vector<int>& mu_prime, const std::vector<int>& nu, const std::vector<int>& mu,
               const std::vector<int>& nu_prime) {
  return {Partition(mu_prime), Partition(nu), Partition(mu), Partition(nu_prime)};
}

Candidate conjugate(const Candidate& c) {
  return {schurcert::conjugate(c.mu_prime), schurcert::conjugate(c.nu), schurcert::conjugate(c.mu),
          schurcert::conjugate(c.nu_prime)};
}

std::optional<Candidate> conjugate(const std::optional<Candidate>& c) {
  if (!c) return std::nullopt;
  return conjugate(*c);
}

Candidate general_recipe(const Partition& lambda, int b) {
  const int p = lambda.rows();
  if (b > 0) {
    const int r = p - b + 1;
    const std::vector<int> mu = rows_of(lambda, p - r + 1, p);
    const std::vector<int> nu = rows_of(lambda, 1, p - r);
    return make(drop_last_box(mu), nu, mu, concat(nu, {1}));
  }
  if (b == 0) return {*remove_boxes(lambda, 1).begin(), Partition{}, lambda, Partition{1}};
  return conjugate(general_recipe(schurcert::conjugate(lambda), -b));
}

std::optional<Candidate> non_rectangle_recipe(const Partition& lambda, int b, LrCalculator& lr) {
  if (b <= 0) return std::nullopt;
  const int p = lambda.rows();
  const int r = p - b + 1;
  const Partition mu_prime(rows_of(lambda, p - r + 2, p));
  const std::vector<int> top = rows_of(lambda, 1, p - r + 1);
  const Partition nu(drop_last_box(top));
  for (const Partition& mu : mu_plus(mu_prime, nu, lambda, lr))
    if (mu.rows() == r - 1) return Candidate{mu_prime, nu, mu, Partition(top)};
  return std::nullopt;
}

std::optional<Candidate> no_box_3_2_recipe(const Partition& lambda, int b) {
  const int p = lambda.rows();
  const int q = lambda.columns();
  const int l1 = lambda.row(1);
  const int l2 = lambda.row(2);
  if (b > 0) {
    const int r = p - b + 1;
    if (r >= 2 && r <= p - 2) return general_recipe(lambda, b);
    if (r == p - 1 && p >= 3) return make(ones(p - 1), {q - 1, l2 - 1}, ones(p), {q, l2 - 1});
    if (r == p && p >= 2) return make(concat({q}, ones(p - 2)), {l2 - 1}, concat({q}, ones(p - 1)), {l2});
    return std::nullopt;
  }
  if (b == 0) {
    if (p < 2) return std::nullopt;
    return make({l2 - 1}, concat({q}, ones(p - 2)), {l2}, concat({q}, ones(p - 1)));
  }
  const int c = q + b + 1;
  if (c >= 2 && c <= q - 2) return general_recipe(lambda, b);
  if (p < 2) return std::nullopt;
  return make({l1, l2 - 1}, ones(p - 2), {l1, l2}, ones(p - 1));
}

std::optional<Candidate> hook_recipe(const Partition& lambda, int b) {
  const int p = lambda.rows();
  const int q = lambda.columns();
  if (b > 0) {
    if (p - b + 1 < p) return general_recipe(lambda, b);
    return make(ones(p - 1), {q - 1}, ones(p), {q});
  }
  if (b < 0) {
    if (q + b + 1 < q) return general_recipe(lambda, b);
    return make({q - 1}, ones(p - 1), {q}, ones(p));
  }
  return std::nullopt;
}

// Every violated hypothesis of `w` for the branch (a, b) = (d - b, b). With
// `branch` unset only the structural conditions are checked (generic witness).
std::vector<std::string> witness_problems(const Partition& lambda, const Witness& w, long d, std::optional<int> branch,
                                          const Field& field, LrCalculator& lr, bool both_methods) {
  std::vector<std::string> problems;
  const int n = lambda.size();
  if (w.i < 1 || w.i > n) {
    problems.push_back("i = " + std::to_string(w.i) + " outside [1, " + std::to_string(n) + "]");
    return problems;
  }
  if (w.mu_prime.size() != w.i - 1 || !is_contained(w.mu_prime, lambda))
    problems.push_back("mu' = " + w.mu_prime.to_string() + " is not in lambda - " + std::to_string(n - w.i + 1));
  if (w.nu.size() != n - w.i || !is_contained(w.nu, lambda))
    problems.push_back("nu = " + w.nu.to_string() + " is not in lambda - " + std::to_string(w.i));
  if (!add_box(w.mu_prime).contains(w.mu))
    problems.push_back("mu = " + w.mu.to_string() + " is not mu' plus a box");
  if (!add_box(w.nu).contains(w.nu_prime))
    problems.push_back("nu' = " + w.nu_prime.to_string() + " is not nu plus a box");
  if (!problems.empty()) return problems;

  auto check_lr = [&](const Partition& x, const Partition& y, const char* label) {
    const std::int64_t by_characters = lr.coefficient({lambda, x, y});
    if (by_characters == 0) problems.push_back(std::string(label) + " vanishes");
    if (both_methods) {
      const std::int64_t by_tableaux = lr_by_tableaux(lambda, x, y);
      if (by_tableaux != by_characters)
        problems.push_back(std::string(label) + ": character value " + std::to_string(by_characters) +
                           " differs from tableau count " + std::to_string(by_tableaux));
    }
  };
  check_lr(w.mu, w.nu, "N^lambda_{mu,nu}");
  check_lr(w.mu_prime, w.nu_prime, "N^lambda_{mu',nu'}");

  if (w.a_forbidden != root_set(w.mu)) problems.push_back("stored A differs from root_set(mu)");
  if (w.b_forbidden != root_set(w.nu_prime)) problems.push_back("stored B differs from root_set(nu')");
  if (branch) {
    const long b = *branch;
    if (field.contains(root_set(w.nu_prime), b)) problems.push_back("b = " + std::to_string(b) + " lies in B");
    if (field.contains(root_set(w.mu), d - b)) problems.push_back("a = " + std::to_string(d - b) + " lies in A");
  }
  return problems;
}

std::optional<Witness> accept(const Partition& lambda, long d, int b, const Field& field, LrCalculator& lr,
                              const Candidate& c, WitnessSource source) {
  Witness w{c.mu.size(), c.mu_prime, c.nu, c.mu, c.nu_prime, root_set(c.mu), root_set(c.nu_prime), source};
  if (!witness_problems(lambda, w, d, b, field, lr, false).empty()) return std::nullopt;
  return w;
}

}  // namespace

std::optional<Witness> recipe_witness(const Partition& lambda, long d, int b, const Field& field, LrCalculator& lr) {
  const int p = lambda.rows();
  const int q = lambda.columns();
  const bool rectangle = is_rectangle(lambda);
  const Partition lambda_t = schurcert::conjugate(lambda);

  std::vector<std::pair<std::function<std::optional<Candidate>()>, WitnessSource>> recipes;
  if (field.equal(d, p) && !rectangle)
    recipes.emplace_back([&] { return non_rectangle_recipe(lambda, b, lr); }, WitnessSource::non_rectangle);
  if (field.equal(d, -q) && !rectangle)
    recipes.emplace_back([&] { return conjugate(non_rectangle_recipe(lambda_t, -b, lr)); },
                         WitnessSource::non_rectangle_conjugate);
  if (field.equal(d, 1) && !contains_box(lambda, 3, 2))
    recipes.emplace_back([&] { return no_box_3_2_recipe(lambda, b); }, WitnessSource::no_box_3_2);
  if (field.equal(d, -1) && !contains_box(lambda, 2, 3))
    recipes.emplace_back([&] { return conjugate(no_box_3_2_recipe(lambda_t, -b)); }, WitnessSource::no_box_2_3);
  if (field.equal(d, 0) && is_hook(lambda))
    recipes.emplace_back([&] { return hook_recipe(lambda, b); }, WitnessSource::hook);
  recipes.emplace_back([&] { return std::optional<Candidate>(general_recipe(lambda, b)); }, WitnessSource::general);

  for (const auto& [build, source] : recipes) {
    std::optional<Candidate> candidate;
    try {
      candidate = build();
    } catch (const std::invalid_argument&) {
      continue;  // the recipe asks for a shape that does not exist here
    }
    if (!candidate) continue;
    if (auto w = accept(lambda, d, b, field, lr, *candidate, source)) return w;
  }
  return std::nullopt;
}

std::optional<Witness> search_witness(const Partition& lambda, long d, int b, const Field& field, LrCalculator& lr) {
  const int n = lambda.size();
  for (int i = 1; i <= n; ++i) {
    const PartitionSet mu_primes = remove_boxes(lambda, n - i + 1);
    const PartitionSet nus = remove_boxes(lambda, i);
    for (auto mp = mu_primes.rbegin(); mp != mu_primes.rend(); ++mp)
      for (auto nu = nus.rbegin(); nu != nus.rend(); ++nu) {
        const PartitionSet mus = add_box(*mp);
        const PartitionSet nu_primes = add_box(*nu);
        for (auto mu = mus.rbegin(); mu != mus.rend(); ++mu) {
          if (field.contains(root_set(*mu), d - b)) continue;
          if (lr.coefficient({lambda, *mu, *nu}) == 0) continue;
          for (auto np = nu_primes.rbegin(); np != nu_primes.rend(); ++np) {
            if (field.contains(root_set(*np), b)) continue;
            if (lr.coefficient({lambda, *mp, *np}) == 0) continue;
            return Witness{i, *mp, *nu, *mu, *np, root_set(*mu), root_set(*np), WitnessSource::exhaustive_search};
          }
        }
      }
  }
  return std::nullopt;
}

std::optional<CounterexampleReport> counterexample_for(const Partition& lambda, long d, const Field& field) {
  if (!in_f_set(lambda, d, field)) return std::nullopt;
  const int p = lambda.rows();
  const int q = lambda.columns();
  CounterexampleReport report{lambda, d, field.characteristic(), CounterexampleFamily::super, 0, 0};
  for (int total = 2; total <= (p - 1) + (q - 1); ++total)
    for (int r = 0; r <= total; ++r) {
      const int s = total - r;
      if (contains_box(lambda, r + 1, s + 1) && field.equal(r - s, d)) {
        report.r = r;
        report.s = s;
        return report;
      }
    }
  if (is_rectangle(lambda) && p > 1 && field.equal(d, p)) {
    report.family = CounterexampleFamily::rectangle_top;
    return report;
  }
  if (is_rectangle(lambda) && q > 1 && field.equal(d, -q)) {
    report.family = CounterexampleFamily::rectangle_bottom_twist;
    return report;
  }
  throw std::logic_error("no counterexample family for " + lambda.to_string() + " at d = " + std::to_string(d));
}

namespace {

Field checked_field(const Partition& lambda, int characteristic) {
  if (lambda.size() < 1) throw std::invalid_argument("lambda must be a partition of n >= 1");
  Field field(characteristic);
  if (characteristic != 0 && characteristic <= lambda.size())
    throw std::invalid_argument("characteristic " + std::to_string(characteristic) + " must exceed n = " +
                                std::to_string(lambda.size()));
  return field;
}

}  // namespace

CertifyResult certify(const Partition& lambda, long d, int characteristic, const CertifyOptions& options) {
  const Field field = checked_field(lambda, characteristic);
  if (auto report = counterexample_for(lambda, d, field)) return *report;

  Certificate certificate{lambda, d, characteristic, generic_witness(lambda), {}};
  LrCalculator& lr = default_lr_calculator();
  for (int b = 1 - lambda.columns(); b <= lambda.rows() - 1; ++b) {
    std::optional<Witness> w = recipe_witness(lambda, d, b, field, lr);
    if (!w && options.allow_search) w = search_witness(lambda, d, b, field, lr);
    if (!w)
      throw CertificationFailure("no witness for " + lambda.to_string() + " at d = " + std::to_string(d) +
                                 ", b = " + std::to_string(b) +
                                 (options.allow_search ? "" : " (recipes only)"));
    certificate.branches.emplace(b, std::move(*w));
  }
  return certificate;
}

VerificationResult verify_certificate(const Certificate& c) {
  VerificationResult result;
  auto fail = [&](std::string message) {
    result.valid = false;
    result.diagnostics.push_back(std::move(message));
  };

  std::optional<Field> field;
  try {
    field = checked_field(c.lambda, c.characteristic);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
    return result;
  }
  if (in_f_set(c.lambda, c.d, *field)) fail("d = " + std::to_string(c.d) + " lies in F(lambda)");

  CharacterCache characters;
  LrCalculator lr(characters);

  const Witness& g = c.generic;
  if (g.i != 1 || !g.mu_prime.empty() || g.mu != Partition{1}) fail("generic witness must have i = 1, mu' = (0), mu = (1)");
  for (const std::string& problem : witness_problems(c.lambda, g, c.d, std::nullopt, *field, lr, true))
    fail("generic: " + problem);
  if (!g.a_forbidden.empty()) fail("generic: A must be empty");

  std::set<int> expected;
  for (int b = 1 - c.lambda.columns(); b <= c.lambda.rows() - 1; ++b) expected.insert(b);
  std::set<int> keys;
  for (const auto& [b, w] : c.branches) keys.insert(b);
  if (keys != expected)
    fail("branches must be exactly {" + std::to_string(1 - c.lambda.columns()) + ", ..., " +
         std::to_string(c.lambda.rows() - 1) + "}");
  for (int x : root_set(g.nu_prime))
    if (!field->contains(keys, x)) fail("b = " + std::to_string(x) + " in B is not covered by a branch");

  for (const auto& [b, w] : c.branches)
    for (const std::string& problem : witness_problems(c.lambda, w, c.d, b, *field, lr, true))
      fail("branch b = " + std::to_string(b) + ": " + problem);
  return result;
}

VerificationResult verify_counterexample(const CounterexampleReport& report, const OracleLimits& limits) {
  VerificationResult result;
  auto fail = [&](std::string message) {
    result.valid = false;
    result.diagnostics.push_back(std::move(message));
  };

  std::optional<Field> field;
  try {
    field = checked_field(report.lambda, report.characteristic);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
    return result;
  }
  const Partition& lambda = report.lambda;
  if (!in_f_set(lambda, report.d, *field)) fail("d = " + std::to_string(report.d) + " is not in F(lambda)");

  // (dim V / n!) cp(top) = 1 detects the rectangle whose Schur functor has
  // categorical dimension one.
  auto unit_dimension = [](const Partition& shape, int top) {
    const Rational value = ratio(Integer(static_cast<long>(irrep_dimension(shape))), factorial(shape.size())) *
                           content_polynomial(shape)(Rational(top));
    return value == 1;
  };

  switch (report.family) {
    case CounterexampleFamily::super: {
      const int r = report.r;
      const int s = report.s;
      if (r < 0 || s < 0 || r + s < 2) fail("super family needs r, s >= 0 and r + s >= 2");
      if (!field->equal(r - s, report.d)) fail("r - s does not equal d");
      if (!contains_box(lambda, r + 1, s + 1))
        fail("box (" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ") is not in lambda");
      if (!result.valid || r + s < 1) break;
      std::size_t power = 1;
      bool small = true;
      for (int k = 0; k < lambda.size() && small; ++k) {
        power *= static_cast<std::size_t>(r + s);
        small = power <= limits.max_dimension;
      }
      if (small) {
        const SchurRank rank = schur_rank(lambda, SuperSpace{r, s}, limits);
        result.oracle_checked = true;
        if (rank.total != 0) fail("Schur functor of k^{r|s} has rank " + std::to_string(rank.total) + ", expected 0");
      }
      break;
    }
    case CounterexampleFamily::rectangle_top:
      if (!is_rectangle(lambda) || lambda.rows() < 2) fail("rectangle_top needs a rectangle with p > 1");
      if (!field->equal(report.d, lambda.rows())) fail("d does not equal p");
      if (!unit_dimension(lambda, lambda.rows())) fail("(dim V / n!) cp(p) is not 1");
      break;
    case CounterexampleFamily::rectangle_bottom_twist: {
      if (!is_rectangle(lambda) || lambda.columns() < 2) fail("rectangle_bottom_twist needs a rectangle with q > 1");
      if (!field->equal(report.d, -lambda.columns())) fail("d does not equal -q");
      const Partition lambda_t = conjugate(lambda);
      if (!unit_dimension(lambda_t, lambda_t.rows())) fail("(dim V / n!) cp(q) of the conjugate is not 1");
      break;
    }
  }
  return result;
}

}  // namespace schurcert
