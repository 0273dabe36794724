#include "schurcert/group_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "schurcert/characters.hpp"

namespace schurcert {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  for (const auto& cycle : cycles)
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      if (from < 1 || from > m) throw std::invalid_argument("cycle entry out of range");
      images[static_cast<std::size_t>(from - 1)] = cycle[(k + 1) % cycle.size()];
    }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k)
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  return Permutation(std::move(inv));
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int count = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(images_[k] - 1)) seen[k] = true;
  }
  return count;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(images_[k] - 1)) {
      seen[k] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("composing permutations of different degrees");
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) images[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation embed_fixing_first(const Permutation& tau) {
  std::vector<int> images{1};
  for (int v : tau.images()) images.push_back(v + 1);
  return Permutation(std::move(images));
}

GroupAlgebraElement GroupAlgebraElement::delta(const Permutation& sigma) {
  GroupAlgebraElement x(sigma.degree());
  x.add(sigma, 1);
  return x;
}

Rational GroupAlgebraElement::coefficient(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation& sigma, const Rational& coefficient) {
  if (sigma.degree() != degree_) throw DegreeMismatch("term degree differs from element degree");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(sigma, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (other.degree_ != degree_) throw DegreeMismatch("adding elements of different degrees");
  for (const auto& [sigma, c] : other.terms_) add(sigma, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  if (other.degree_ != degree_) throw DegreeMismatch("subtracting elements of different degrees");
  for (const auto& [sigma, c] : other.terms_) add(sigma, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [sigma, c] : terms_) c *= scalar;
  return *this;
}

namespace {

// Lexicographic rank of a permutation among all of S_m.
std::size_t lex_rank(const std::vector<int>& images, const std::vector<std::size_t>& fact) {
  std::size_t rank = 0;
  const std::size_t m = images.size();
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t smaller = 0;
    for (std::size_t l = k + 1; l < m; ++l)
      if (images[l] < images[k]) ++smaller;
    rank += smaller * fact[m - 1 - k];
  }
  return rank;
}

void check_cap(int degree, const ProductLimits& limits, const char* what) {
  if (degree > limits.max_degree)
    throw CapExceeded(std::string(what) + ": degree " + std::to_string(degree) + " exceeds cap " +
                      std::to_string(limits.max_degree));
}

}  // namespace

GroupAlgebraElement multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y,
                             const ProductLimits& limits) {
  if (x.degree() != y.degree()) throw DegreeMismatch("multiply: degree mismatch");
  const int m = x.degree();
  check_cap(m, limits, "multiply");

  std::vector<std::size_t> fact(static_cast<std::size_t>(m) + 1, 1);
  for (std::size_t k = 1; k < fact.size(); ++k) fact[k] = fact[k - 1] * k;

  // Dense accumulation keyed by lexicographic rank keeps the result independent
  // of the summation order.
  std::vector<Rational> acc(fact[static_cast<std::size_t>(m)]);
  std::vector<bool> touched(acc.size(), false);
  std::vector<int> images(static_cast<std::size_t>(m));
  for (const auto& [s, a] : x.terms()) {
    for (const auto& [t, b] : y.terms()) {
      for (int i = 1; i <= m; ++i) images[static_cast<std::size_t>(i - 1)] = s(t(i));
      std::size_t r = lex_rank(images, fact);
      acc[r] += a * b;
      touched[r] = true;
    }
  }

  GroupAlgebraElement out(m);
  if (std::none_of(touched.begin(), touched.end(), [](bool b) { return b; })) return out;
  std::size_t r = 0;
  for (const Permutation& sigma : all_permutations(m)) {
    if (touched[r] && acc[r] != 0) out.add(sigma, acc[r]);
    ++r;
  }
  return out;
}

GroupAlgebraElement embed_fixing_first(const GroupAlgebraElement& x) {
  GroupAlgebraElement out(x.degree() + 1);
  for (const auto& [sigma, c] : x.terms()) out.add(embed_fixing_first(sigma), c);
  return out;
}

YoungTableau::YoungTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw std::invalid_argument("tableau row count does not match its shape");
  std::vector<int> entries;
  for (int i = 1; i <= shape_.rows(); ++i) {
    const auto& r = rows_[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(r.size()) != shape_.row(i))
      throw std::invalid_argument("tableau row length does not match its shape");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  std::sort(entries.begin(), entries.end());
  if (std::adjacent_find(entries.begin(), entries.end()) != entries.end() || (!entries.empty() && entries.front() < 1))
    throw std::invalid_argument("tableau entries must be distinct positive integers");
}

YoungTableau YoungTableau::canonical(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : shape.parts()) {
    std::vector<int> r(static_cast<std::size_t>(len));
    std::iota(r.begin(), r.end(), next);
    next += len;
    rows.push_back(std::move(r));
  }
  return YoungTableau(shape, std::move(rows));
}

std::vector<std::vector<int>> YoungTableau::columns() const {
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape_.columns()));
  for (const auto& r : rows_)
    for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
  return cols;
}

bool YoungTableau::is_standard() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0 && rows_[i][j] <= rows_[i][j - 1]) return false;
      if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
    }
  return true;
}

YoungTableau YoungTableau::shifted(int offset) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (int& v : r) v += offset;
  return YoungTableau(shape_, std::move(rows));
}

namespace {

void standard_rec(const Partition& shape, std::vector<int>& filled, int next,
                  std::vector<std::vector<int>>& rows, std::vector<YoungTableau>& out) {
  if (next > shape.size()) {
    out.emplace_back(shape, rows);
    return;
  }
  for (int i = 1; i <= shape.rows(); ++i) {
    auto& len = filled[static_cast<std::size_t>(i - 1)];
    if (len >= shape.row(i)) continue;
    if (i > 1 && filled[static_cast<std::size_t>(i - 2)] <= len) continue;
    rows[static_cast<std::size_t>(i - 1)].push_back(next);
    ++len;
    standard_rec(shape, filled, next + 1, rows, out);
    --len;
    rows[static_cast<std::size_t>(i - 1)].pop_back();
  }
}

// All permutations of {1..degree} preserving each block setwise, with signs.
std::vector<std::pair<Permutation, int>> block_group(const std::vector<std::vector<int>>& blocks, int degree) {
  std::vector<std::pair<Permutation, int>> group{{Permutation::identity(degree), 1}};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<Permutation, int>> next;
    std::vector<int> image = sorted;
    do {
      std::vector<int> images(static_cast<std::size_t>(degree));
      std::iota(images.begin(), images.end(), 1);
      for (std::size_t k = 0; k < sorted.size(); ++k) images[static_cast<std::size_t>(sorted[k] - 1)] = image[k];
      Permutation local(std::move(images));
      for (const auto& [g, sign] : group) next.emplace_back(local * g, sign * local.sign());
    } while (std::next_permutation(image.begin(), image.end()));
    group = std::move(next);
  }
  return group;
}

}  // namespace

std::vector<YoungTableau> standard_tableaux(const Partition& shape) {
  std::vector<YoungTableau> out;
  std::vector<int> filled(static_cast<std::size_t>(shape.rows()), 0);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  standard_rec(shape, filled, 1, rows, out);
  return out;
}

GroupAlgebraElement young_symmetrizer(const YoungTableau& t, int degree) {
  for (const auto& r : t.rows())
    for (int v : r)
      if (v > degree) throw std::invalid_argument("tableau entry exceeds the requested degree");
  const auto row_group = block_group(t.rows(), degree);
  const auto col_group = block_group(t.columns(), degree);
  // Row and column stabilizers meet trivially, so every product a*b is distinct.
  GroupAlgebraElement out(degree);
  for (const auto& [a, unused] : row_group)
    for (const auto& [b, sign] : col_group) out.add(a * b, sign);
  return out;
}

GroupAlgebraElement central_idempotent(const Partition& beta, int characteristic, const ProductLimits& limits) {
  const int m = beta.size();
  if (characteristic != 0 && characteristic <= m)
    throw std::invalid_argument("central_idempotent: characteristic " + std::to_string(characteristic) +
                                " does not exceed m = " + std::to_string(m));
  check_cap(m, limits, "central_idempotent");
  const Rational scale = ratio(Integer(static_cast<long>(irrep_dimension(beta))), factorial(m));
  GroupAlgebraElement out(m);
  for (const Permutation& sigma : all_permutations(m)) {
    const std::int64_t value = chi(beta, sigma.cycle_type());
    if (value != 0) out.add(sigma, scale * Rational(Integer(static_cast<long>(value))));
  }
  return out;
}

}  // namespace schurcert
