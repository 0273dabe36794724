#include <doctest.h>

#include <algorithm>
#include <functional>

#include "schurcert/partition.hpp"

using namespace schurcert;

namespace {

// Every weakly decreasing vector bounded by lambda componentwise, with the given size.
PartitionSet brute_sub_diagrams(const Partition& lambda, int size) {
  PartitionSet out;
  std::vector<int> parts(static_cast<std::size_t>(lambda.rows()), 0);
  std::function<void(int)> fill = [&](int k) {
    if (k == lambda.rows()) {
      int total = 0;
      for (int x : parts) total += x;
      if (total == size) out.insert(Partition(parts));
      return;
    }
    const int cap = k == 0 ? lambda.row(1) : std::min(lambda.row(k + 1), parts[static_cast<std::size_t>(k - 1)]);
    for (int x = 0; x <= cap; ++x) {
      parts[static_cast<std::size_t>(k)] = x;
      fill(k + 1);
    }
  };
  fill(0);
  return out;
}

// Partition counts p(n) for n = 0..10.
constexpr int kPartitionCounts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};

std::set<int> interval(int lo, int hi) {
  std::set<int> out;
  for (int x = lo; x <= hi; ++x) out.insert(x);
  return out;
}

}  // namespace

TEST_CASE("construction and accessors") {
  const Partition lambda{3, 1, 0, 0};
  CHECK(lambda.parts() == std::vector<int>{3, 1});
  CHECK(lambda.size() == 4);
  CHECK(lambda.rows() == 2);
  CHECK(lambda.columns() == 3);
  CHECK(lambda.row(3) == 0);
  CHECK(lambda.to_string() == "(3,1)");
  CHECK(Partition{}.to_string() == "(0)");
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("partitions_of counts and order") {
  for (int n = 0; n <= 10; ++n) {
    const auto ps = partitions_of(n);
    CHECK(static_cast<int>(ps.size()) == kPartitionCounts[n]);
    CHECK(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n)) CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("shape predicates") {
  CHECK(is_hook(Partition{3, 1, 1}));
  CHECK_FALSE(is_hook(Partition{2, 2}));
  CHECK(is_rectangle(Partition{2, 2}));
  CHECK(is_rectangle(Partition{1, 1, 1}));
  CHECK_FALSE(is_rectangle(Partition{2, 1}));
  CHECK(contains_box(Partition{2, 2}, 2, 2));
  CHECK_FALSE(contains_box(Partition{2, 2}, 3, 2));
  CHECK(is_contained(Partition{2, 1}, Partition{3, 1}));
  CHECK_FALSE(is_contained(Partition{1, 1, 1}, Partition{3, 1}));
}

TEST_CASE("remove_boxes matches brute-force sub-diagram enumeration") {
  CHECK(remove_boxes(Partition{2, 1}, 1) == PartitionSet{Partition{2}, Partition{1, 1}});
  CHECK(remove_boxes(Partition{2, 2}, 2) == PartitionSet{Partition{2}, Partition{1, 1}});
  CHECK(remove_boxes(Partition{3}, 3) == PartitionSet{Partition{}});
  CHECK_THROWS_AS(remove_boxes(Partition{2}, 3), std::out_of_range);
  for (int n = 1; n <= 7; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int i = 0; i <= n; ++i) CHECK(remove_boxes(lambda, i) == brute_sub_diagrams(lambda, n - i));
}

TEST_CASE("add_box size and adjointness with remove_boxes") {
  CHECK(add_box(Partition{2, 1}) == PartitionSet{Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}});
  CHECK(add_box(Partition{}) == PartitionSet{Partition{1}});
  for (int n = 0; n <= 6; ++n)
    for (const Partition& alpha : partitions_of(n)) {
      std::set<int> values(alpha.parts().begin(), alpha.parts().end());
      CHECK(add_box(alpha).size() == values.size() + 1);
    }
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int i = 1; i <= n; ++i)
        for (const Partition& mu : partitions_of(n - i)) {
          PartitionSet reached{mu};
          for (int k = 0; k < i; ++k) {
            PartitionSet next;
            for (const Partition& x : reached) next.merge(add_box(x));
            reached = std::move(next);
          }
          CHECK(remove_boxes(lambda, i).contains(mu) == reached.contains(lambda));
        }
}

TEST_CASE("contents") {
  CHECK(contents(Partition{2, 1}) == std::vector<int>{0, 1, -1});
  CHECK(contents(Partition{1}) == std::vector<int>{0});
  CHECK(contents(Partition{2, 2}) == std::vector<int>{0, 1, -1, 0});
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      const auto c = contents(lambda);
      std::set<int> negated;
      for (int x : c) negated.insert(-x);
      CHECK(negated == interval(1 - lambda.columns(), lambda.rows() - 1));
      const auto zeros = std::count(c.begin(), c.end(), 0);
      CHECK((zeros == 1) == is_hook(lambda));
    }
}

TEST_CASE("F sets") {
  CHECK(f_set(Partition{2, 1}).empty());
  CHECK(f_set(Partition{1}).empty());
  CHECK(f_set(Partition{1, 1, 1}) == std::set<int>{2, 3});
  CHECK(f_set(Partition{2, 2}) == std::set<int>{-2, 0, 2});
  CHECK(r_set(Partition{3, 1}) == interval(-3, 2));
  for (int n = 2; n <= 10; ++n) {
    CHECK(f_set(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == interval(2, n));
    CHECK(f_set(Partition{n}) == interval(-n, -2));
  }
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      std::set<int> negated;
      for (int x : f_set(conjugate(lambda))) negated.insert(-x);
      CHECK(f_set(lambda) == negated);
    }
}
