#include "schurcert/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schurcert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row(int i) const {
  if (i < 1 || i > rows()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

std::string Partition::to_string() const {
  std::string s = "(";
  if (parts_.empty()) s += "0";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    current.push_back(k);
    partitions_rec(remaining - k, k, current, out);
    current.pop_back();
  }
}

// Sub-diagrams of `bound` with exactly `target` boxes, built row by row.
void subdiagrams_rec(const Partition& bound, int row, int remaining, int cap, std::vector<int>& current,
                     PartitionSet& out) {
  if (remaining == 0) {
    out.emplace(current);
    return;
  }
  if (row > bound.rows()) return;
  int hi = std::min({cap, bound.row(row), remaining});
  for (int k = hi; k >= 1; --k) {
    current.push_back(k);
    subdiagrams_rec(bound, row + 1, remaining - k, k, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.columns()), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

bool contains_box(const Partition& lambda, int i, int j) {
  return i >= 1 && j >= 1 && j <= lambda.row(i);
}

bool is_hook(const Partition& lambda) { return !contains_box(lambda, 2, 2); }

bool is_rectangle(const Partition& lambda) {
  const auto& p = lambda.parts();
  return std::adjacent_find(p.begin(), p.end(), std::not_equal_to<>()) == p.end();
}

bool is_contained(const Partition& mu, const Partition& lambda) {
  if (mu.rows() > lambda.rows()) return false;
  for (int i = 1; i <= mu.rows(); ++i)
    if (mu.row(i) > lambda.row(i)) return false;
  return true;
}

std::vector<Box> boxes(const Partition& lambda) {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.rows(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) out.push_back({i, j});
  return out;
}

PartitionSet remove_boxes(const Partition& lambda, int i) {
  if (i < 0 || i > lambda.size())
    throw std::out_of_range("remove_boxes: cannot delete " + std::to_string(i) + " boxes from " +
                            lambda.to_string());
  PartitionSet out;
  std::vector<int> current;
  subdiagrams_rec(lambda, 1, lambda.size() - i, lambda.columns(), current, out);
  return out;
}

PartitionSet add_box(const Partition& alpha) {
  PartitionSet out;
  std::vector<int> parts = alpha.parts();
  parts.push_back(0);
  for (std::size_t r = 0; r < parts.size(); ++r) {
    if (r > 0 && parts[r] + 1 > parts[r - 1]) continue;
    ++parts[r];
    out.emplace(parts);
    --parts[r];
  }
  return out;
}

std::vector<int> contents(const Partition& lambda) {
  std::vector<int> out;
  for (const Box& b : boxes(lambda)) out.push_back(b.col - b.row);
  return out;
}

std::set<int> r_set(const Partition& lambda) {
  std::set<int> out;
  for (int x = -lambda.columns(); x <= lambda.rows(); ++x) out.insert(x);
  return out;
}

std::set<int> t_set(const Partition& lambda) {
  std::set<int> out;
  if (is_hook(lambda)) out.insert(0);
  if (!contains_box(lambda, 3, 2)) out.insert(1);
  if (!contains_box(lambda, 2, 3)) out.insert(-1);
  if (!is_rectangle(lambda)) {
    out.insert(-lambda.columns());
    out.insert(lambda.rows());
  }
  return out;
}

std::set<int> f_set(const Partition& lambda) {
  std::set<int> out;
  const std::set<int> excluded = t_set(lambda);
  for (int x : r_set(lambda))
    if (!excluded.contains(x)) out.insert(x);
  return out;
}

}  // namespace schurcert
