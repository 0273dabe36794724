#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace schurcert {

/// A box of a Young diagram, 1-based (row, column).
struct Box {
  int row = 1;
  int col = 1;
  auto operator<=>(const Box&) const = default;
};

/// Integer partition stored as its weakly decreasing list of positive parts.
/// The empty list is the partition (0) of 0.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument on negative or
  /// increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int columns() const { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const { return parts_.empty(); }

  /// Length of row i (1-based); 0 beyond the last row.
  int row(int i) const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Sets of partitions iterate in lexicographically descending order, which is
/// also their canonical serialization order.
using PartitionSet = std::set<Partition, std::greater<>>;

/// All partitions of n, lexicographically descending.
std::vector<Partition> partitions_of(int n);

Partition conjugate(const Partition& lambda);
bool contains_box(const Partition& lambda, int i, int j);
bool is_hook(const Partition& lambda);
bool is_rectangle(const Partition& lambda);
/// Componentwise containment mu ⊆ lambda.
bool is_contained(const Partition& mu, const Partition& lambda);
std::vector<Box> boxes(const Partition& lambda);

/// Every partition of n-i whose diagram sits inside lambda.
PartitionSet remove_boxes(const Partition& lambda, int i);
/// Every partition obtained by adding one box to alpha.
PartitionSet add_box(const Partition& alpha);

/// Contents j-i over the boxes, in row reading order.
std::vector<int> contents(const Partition& lambda);

/// The interval {-q, ..., p}.
std::set<int> r_set(const Partition& lambda);
/// Dimensions excluded from R by the hook, (3,2), (2,3) and non-rectangle rules.
std::set<int> t_set(const Partition& lambda);
/// F(lambda) = R(lambda) \ T(lambda), as mathematical integers.
std::set<int> f_set(const Partition& lambda);

}  // namespace schurcert
