#include <doctest.h>

#include "schurcert/certifier.hpp"

using namespace schurcert;

namespace {

const Certificate& as_certificate(const CertifyResult& r) { return std::get<Certificate>(r); }
const CounterexampleReport& as_report(const CertifyResult& r) { return std::get<CounterexampleReport>(r); }

}  // namespace

TEST_CASE("fields") {
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_THROWS_AS(Field(4), std::invalid_argument);
  const Field f7(7);
  CHECK(f7.reduce(-3) == 4);
  CHECK(f7.equal(10, 3));
  CHECK(f7.contains({-4}, 3));
  CHECK_FALSE(Field(0).contains({-4}, 3));
}

TEST_CASE("certificate for (1,1) at d = 3") {
  const Certificate c = as_certificate(certify(Partition{1, 1}, 3));
  CHECK(c.generic.i == 1);
  CHECK(c.generic.nu_prime == Partition{1, 1});
  CHECK(c.generic.b_forbidden == std::set<int>{1});
  REQUIRE(c.branches.size() == 2);
  const Witness& w = c.branches.at(1);
  CHECK(w.i == 2);
  CHECK(w.mu_prime == Partition{1});
  CHECK(w.nu == Partition{});
  CHECK(w.mu == Partition{1, 1});
  CHECK(w.nu_prime == Partition{1});
  CHECK(verify_certificate(c).valid);
}

TEST_CASE("every d certifies for (2,1)") {
  for (long d = -10; d <= 10; ++d) {
    const CertifyResult r = certify(Partition{2, 1}, d);
    REQUIRE(std::holds_alternative<Certificate>(r));
    CHECK(verify_certificate(as_certificate(r)).valid);
    CHECK_FALSE(as_certificate(r).uses_search());
  }
}

TEST_CASE("counterexample families") {
  const CounterexampleReport column = as_report(certify(Partition{1, 1, 1}, 2));
  CHECK(column.family == CounterexampleFamily::super);
  CHECK(column.r == 2);
  CHECK(column.s == 0);
  const VerificationResult checked = verify_counterexample(column);
  CHECK(checked.valid);
  CHECK(checked.oracle_checked);

  const CounterexampleReport square = as_report(certify(Partition{2, 2}, 0));
  CHECK(square.family == CounterexampleFamily::super);
  CHECK(square.r == 1);
  CHECK(square.s == 1);

  CHECK(as_report(certify(Partition{2, 2}, 2)).family == CounterexampleFamily::rectangle_top);
  CHECK(as_report(certify(Partition{2, 2}, -2)).family == CounterexampleFamily::rectangle_bottom_twist);
  CHECK(verify_counterexample(as_report(certify(Partition{2, 2}, 2))).valid);
  CHECK(verify_counterexample(as_report(certify(Partition{2, 2}, -2))).valid);
}

TEST_CASE("verification rejects tampered documents") {
  Certificate c = as_certificate(certify(Partition{3, 1}, 7));
  REQUIRE(verify_certificate(c).valid);

  Certificate missing = c;
  missing.branches.erase(missing.branches.begin());
  CHECK_FALSE(verify_certificate(missing).valid);

  Certificate wrong_lr = c;
  wrong_lr.branches.begin()->second.nu_prime = Partition{1, 1, 1, 1};
  CHECK_FALSE(verify_certificate(wrong_lr).valid);

  Certificate wrong_set = c;
  wrong_set.generic.b_forbidden.insert(99);
  CHECK_FALSE(verify_certificate(wrong_set).valid);

  Certificate bad_d = c;
  bad_d.d = 2;
  CHECK_FALSE(verify_certificate(bad_d).valid);

  CounterexampleReport fake{Partition{2, 1}, 0, 0, CounterexampleFamily::super, 1, 1};
  const VerificationResult rejected = verify_counterexample(fake);
  CHECK_FALSE(rejected.valid);
  CHECK_FALSE(rejected.diagnostics.empty());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(certify(Partition{}, 1), std::invalid_argument);
  CHECK_THROWS_AS(certify(Partition{2, 1}, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(certify(Partition{2, 1}, 1, 6), std::invalid_argument);
  CHECK_NOTHROW(certify(Partition{2, 1}, 1, 5));
}

TEST_CASE("recipes alone can leave a gap that the search closes") {
  const Partition lambda{2, 1, 1};
  const Field q(0);
  CHECK_FALSE(recipe_witness(lambda, 3, 2, q).has_value());
  const auto found = search_witness(lambda, 3, 2, q);
  REQUIRE(found.has_value());
  CHECK(found->source == WitnessSource::exhaustive_search);
  CHECK_THROWS_AS(certify(lambda, 3, 0, CertifyOptions{false}), CertificationFailure);
  const Certificate c = as_certificate(certify(lambda, 3));
  CHECK(c.uses_search());
  CHECK(verify_certificate(c).valid);
}

TEST_CASE("positive characteristic agrees with characteristic 0 when residues stay distinct") {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int prime : {7, 11, 13}) {
        if (prime <= n) continue;
        for (long d = -6; d <= 6; ++d) {
          std::set<long> residues;
          for (int x = -lambda.columns(); x <= lambda.rows(); ++x) residues.insert(Field(prime).reduce(x));
          residues.insert(Field(prime).reduce(d));
          const bool d_in_range = d >= -lambda.columns() && d <= lambda.rows();
          const std::size_t expected = static_cast<std::size_t>(lambda.rows() + lambda.columns() + 1) + (d_in_range ? 0 : 1);
          if (residues.size() != expected) continue;
          const CertifyResult zero = certify(lambda, d, 0);
          const CertifyResult modular = certify(lambda, d, prime);
          CHECK(zero.index() == modular.index());
          if (const auto* c = std::get_if<Certificate>(&modular)) CHECK(verify_certificate(*c).valid);
          else CHECK(verify_counterexample(std::get<CounterexampleReport>(modular)).valid);
        }
      }
}

TEST_CASE("d congruent to a bad value becomes a counterexample") {
  const CertifyResult r = certify(Partition{1, 1, 1}, 9, 7);
  REQUIRE(std::holds_alternative<CounterexampleReport>(r));
  CHECK(verify_counterexample(as_report(r)).valid);
}

TEST_CASE("names round-trip") {
  for (auto s : {WitnessSource::generic, WitnessSource::general, WitnessSource::non_rectangle,
                 WitnessSource::non_rectangle_conjugate, WitnessSource::no_box_3_2, WitnessSource::no_box_2_3,
                 WitnessSource::hook, WitnessSource::exhaustive_search})
    CHECK(witness_source_from_string(to_string(s)) == s);
  for (auto f : {CounterexampleFamily::super, CounterexampleFamily::rectangle_top,
                 CounterexampleFamily::rectangle_bottom_twist})
    CHECK(counterexample_family_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(witness_source_from_string("nope"), std::invalid_argument);
}
