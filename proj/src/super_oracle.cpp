#include "schurcert/super_oracle.hpp"

#include <string>

#include "schurcert/characters.hpp"

namespace schurcert {

GradedMatrix::GradedMatrix(std::vector<int> parities) : parities_(std::move(parities)), rows_(parities_.size()) {}

GradedMatrix GradedMatrix::identity(std::vector<int> parities) {
  GradedMatrix m(std::move(parities));
  for (std::size_t i = 0; i < m.dimension(); ++i) m.add(i, i, 1);
  return m;
}

Rational GradedMatrix::at(std::size_t i, std::size_t j) const {
  auto it = rows_.at(i).find(j);
  return it == rows_[i].end() ? Rational(0) : it->second;
}

void GradedMatrix::add(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= dimension() || j >= dimension()) throw std::out_of_range("GradedMatrix index out of range");
  if (value == 0) return;
  auto [it, inserted] = rows_[i].try_emplace(j, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) rows_[i].erase(it);
  }
}

std::optional<Rational> GradedMatrix::scalar_of_identity() const {
  if (dimension() == 0) return std::nullopt;
  const Rational c = at(0, 0);
  for (std::size_t i = 0; i < dimension(); ++i) {
    const Row& row = rows_[i];
    if (c == 0) {
      if (!row.empty()) return std::nullopt;
      continue;
    }
    if (row.size() != 1 || row.begin()->first != i || row.begin()->second != c) return std::nullopt;
  }
  return c;
}

bool GradedMatrix::is_even() const {
  for (std::size_t i = 0; i < dimension(); ++i)
    for (const auto& [j, value] : rows_[i])
      if (parities_[i] != parities_[j]) return false;
  return true;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.parities_ != b.parities_) throw std::invalid_argument("multiplying matrices on different graded spaces");
  GradedMatrix out(a.parities_);
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (const auto& [k, x] : a.rows_[i])
      for (const auto& [j, y] : b.rows_[k]) out.add(i, j, x * y);
  return out;
}

namespace {

std::size_t checked_power(const SuperSpace& v, int m, const OracleLimits& limits) {
  if (v.even < 0 || v.odd < 0 || v.total() < 1)
    throw std::invalid_argument("super space needs nonnegative dimensions with r + s >= 1");
  std::size_t n = 1;
  for (int k = 0; k < m; ++k) {
    n *= static_cast<std::size_t>(v.total());
    if (n > limits.max_dimension)
      throw CapExceeded("(r+s)^m exceeds oracle cap " + std::to_string(limits.max_dimension));
  }
  return n;
}

std::vector<int> digits_of(std::size_t index, int base, int m) {
  std::vector<int> digits(static_cast<std::size_t>(m));
  for (int k = m - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(base));
    index /= static_cast<std::size_t>(base);
  }
  return digits;
}

std::size_t index_of(const std::vector<int>& digits, int base) {
  std::size_t index = 0;
  for (int d : digits) index = index * static_cast<std::size_t>(base) + static_cast<std::size_t>(d);
  return index;
}

// Column j of the action of sigma: (target row, sign).
std::pair<std::size_t, int> act_on_basis(const Permutation& sigma, const SuperSpace& v, std::size_t column) {
  const int m = sigma.degree();
  const std::vector<int> source = digits_of(column, v.total(), m);
  std::vector<int> target(source.size());
  int sign = 1;
  for (int k = 1; k <= m; ++k) {
    target[static_cast<std::size_t>(sigma(k) - 1)] = source[static_cast<std::size_t>(k - 1)];
    if (v.parity(source[static_cast<std::size_t>(k - 1)]) == 0) continue;
    for (int l = k + 1; l <= m; ++l)
      if (sigma(k) > sigma(l) && v.parity(source[static_cast<std::size_t>(l - 1)]) == 1) sign = -sign;
  }
  return {index_of(target, v.total()), sign};
}

}  // namespace

std::vector<int> tensor_parities(const SuperSpace& v, int m) {
  std::size_t n = 1;
  for (int k = 0; k < m; ++k) n *= static_cast<std::size_t>(v.total());
  std::vector<int> out(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    int parity = 0;
    for (int d : digits_of(idx, v.total(), m)) parity ^= v.parity(d);
    out[idx] = parity;
  }
  return out;
}

GradedMatrix permutation_action(const Permutation& sigma, const SuperSpace& v, const OracleLimits& limits) {
  const std::size_t n = checked_power(v, sigma.degree(), limits);
  GradedMatrix out(tensor_parities(v, sigma.degree()));
  for (std::size_t column = 0; column < n; ++column) {
    const auto [row, sign] = act_on_basis(sigma, v, column);
    out.add(row, column, sign);
  }
  return out;
}

Rational signed_trace(const GradedMatrix& m) {
  Rational sum = 0;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    const Rational diagonal = m.at(i, i);
    if (m.parity(i) == 0) sum += diagonal;
    else sum -= diagonal;
  }
  return sum;
}

GradedMatrix partial_trace_last(const GradedMatrix& matrix, const SuperSpace& v, int m) {
  if (m < 1) throw std::invalid_argument("partial_trace_last: m must be at least 1");
  std::size_t inner = 1;
  for (int k = 1; k < m; ++k) inner *= static_cast<std::size_t>(v.total());
  if (matrix.dimension() != inner * static_cast<std::size_t>(v.total()))
    throw std::invalid_argument("partial_trace_last: matrix dimension does not match (r+s)^m");

  const std::vector<int> inner_parities = tensor_parities(v, m - 1);
  std::vector<int> outer_parities;
  for (int a = 0; a < v.total(); ++a) outer_parities.push_back(v.parity(a));
  GradedMatrix out(outer_parities);
  for (std::size_t a = 0; a < static_cast<std::size_t>(v.total()); ++a) {
    for (std::size_t u = 0; u < inner; ++u) {
      const auto& row = matrix.rows()[a * inner + u];
      for (const auto& [column, value] : row) {
        if (column % inner != u) continue;
        out.add(a, column / inner, inner_parities[u] == 0 ? value : Rational(-value));
      }
    }
  }
  return out;
}

GradedMatrix apply_algebra_element(const GroupAlgebraElement& x, const SuperSpace& v, const OracleLimits& limits) {
  const std::size_t n = checked_power(v, x.degree(), limits);
  GradedMatrix out(tensor_parities(v, x.degree()));
  for (const auto& [sigma, c] : x.terms())
    for (std::size_t column = 0; column < n; ++column) {
      const auto [row, sign] = act_on_basis(sigma, v, column);
      out.add(row, column, sign > 0 ? c : Rational(-c));
    }
  return out;
}

namespace {

using IntegerRow = std::map<std::size_t, Integer>;

// Scales a rational row to a primitive integer row.
IntegerRow primitive_row(const GradedMatrix::Row& row, const std::vector<int>& parities, int parity) {
  Integer lcm = 1;
  for (const auto& [j, value] : row)
    if (parity < 0 || parities[j] == parity) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), value.get_den_mpz_t());
  IntegerRow out;
  for (const auto& [j, value] : row)
    if (parity < 0 || parities[j] == parity) out.emplace(j, value.get_num() * (lcm / value.get_den()));
  return out;
}

void make_primitive(IntegerRow& row) {
  Integer g = 0;
  for (const auto& [j, value] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
  if (g > 1)
    for (auto& [j, value] : row) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), g.get_mpz_t());
}

std::size_t rank_impl(const GradedMatrix& m, int parity) {
  std::map<std::size_t, IntegerRow> pivots;  // leading column -> row
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (parity >= 0 && m.parity(i) != parity) continue;
    IntegerRow row = primitive_row(m.rows()[i], m.parities(), parity);
    while (!row.empty()) {
      const auto lead = row.begin();
      auto pivot = pivots.find(lead->first);
      if (pivot == pivots.end()) break;
      // row <- p * row - r * pivot, which cancels the leading entry
      const Integer p = pivot->second.begin()->second;
      const Integer r = lead->second;
      IntegerRow next;
      for (const auto& [j, value] : row) next[j] = p * value;
      for (const auto& [j, value] : pivot->second) next[j] -= r * value;
      std::erase_if(next, [](const auto& entry) { return entry.second == 0; });
      make_primitive(next);
      row = std::move(next);
    }
    if (!row.empty()) pivots.emplace(row.begin()->first, std::move(row));
  }
  return pivots.size();
}

}  // namespace

std::size_t matrix_rank(const GradedMatrix& m) { return rank_impl(m, -1); }

std::size_t matrix_rank(const GradedMatrix& m, int parity) { return rank_impl(m, parity); }

SchurRank schur_rank(const YoungTableau& t, const SuperSpace& v, const OracleLimits& limits) {
  const GradedMatrix m = apply_algebra_element(young_symmetrizer(t), v, limits);
  SchurRank out;
  out.even = matrix_rank(m, 0);
  out.odd = matrix_rank(m, 1);
  out.total = out.even + out.odd;
  return out;
}

Rational measure_partial_trace_scalar(const GroupAlgebraElement& x, const SuperSpace& v, const OracleLimits& limits) {
  const GradedMatrix traced = partial_trace_last(apply_algebra_element(x, v, limits), v, x.degree());
  const auto scalar = traced.scalar_of_identity();
  if (!scalar) throw NonScalarTrace("partial trace is not a multiple of the identity");
  return *scalar;
}

Rational measure_p_scalar(const Partition& alpha, const Partition& beta, const SuperSpace& v,
                          const OracleLimits& limits) {
  if (!add_box(alpha).contains(beta))
    throw std::invalid_argument(beta.to_string() + " is not obtained from " + alpha.to_string() +
                                " by adding one box");
  const GroupAlgebraElement x = multiply(embed_fixing_first(central_idempotent(alpha, 0, limits.products)),
                                         central_idempotent(beta, 0, limits.products), limits.products);
  const Integer dims = Integer(static_cast<long>(irrep_dimension(alpha))) * static_cast<long>(irrep_dimension(beta));
  return measure_partial_trace_scalar(x, v, limits) / Rational(dims);
}

}  // namespace schurcert
