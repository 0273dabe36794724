#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "schurcert/partition.hpp"
#include "schurcert/rational.hpp"

namespace schurcert {

/// A permutation of {1..m} in one-line notation.
class Permutation {
 public:
  Permutation() = default;  // the unique element of S_0
  /// Throws std::invalid_argument unless `images` is a bijection of {1..m}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  /// Builds a permutation from disjoint cycles, e.g. {{1,2,3}}.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int cycle_count() const;
  Partition cycle_type() const;
  int sign() const { return (degree() - cycle_count()) % 2 == 0 ? 1 : -1; }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// (a * b)(i) = a(b(i)): b acts first.
Permutation operator*(const Permutation& a, const Permutation& b);

/// N(sigma), fixed points counted as 1-cycles.
inline int cycle_count(const Permutation& sigma) { return sigma.cycle_count(); }

/// All of S_m in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int m);

/// The permutation of {1..m} fixing 1 and acting as tau on {2..m} via i -> i+1.
Permutation embed_fixing_first(const Permutation& tau);

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cap on the degree m for operations that touch all of S_m (or S_m x S_m).
struct ProductLimits {
  int max_degree = 7;
};

/// Element of Q[S_m]; zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  using Terms = std::map<Permutation, Rational>;

  explicit GroupAlgebraElement(int degree = 0) : degree_(degree) {}
  static GroupAlgebraElement delta(const Permutation& sigma);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& sigma) const;

  void add(const Permutation& sigma, const Rational& coefficient);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& scalar);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a) { return a *= s; }
  bool operator==(const GroupAlgebraElement&) const = default;

 private:
  int degree_;
  Terms terms_;
};

/// Convolution product. Throws DegreeMismatch, or CapExceeded when the degree
/// exceeds `limits.max_degree`.
GroupAlgebraElement multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y,
                             const ProductLimits& limits = {});

/// Applies embed_fixing_first to every term.
GroupAlgebraElement embed_fixing_first(const GroupAlgebraElement& x);

/// A bijective filling of the diagram of `shape` by {1..m}, stored by rows.
class YoungTableau {
 public:
  YoungTableau(Partition shape, std::vector<std::vector<int>> rows);
  /// Row-reading filling: 1..lambda_1 in the first row, and so on.
  static YoungTableau canonical(const Partition& shape);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<std::vector<int>> columns() const;
  bool is_standard() const;
  /// Adds `offset` to every entry.
  YoungTableau shifted(int offset) const;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// All standard tableaux of the given shape.
std::vector<YoungTableau> standard_tableaux(const Partition& shape);

/// c_t = a_t * b_t (row symmetrizer times signed column antisymmetrizer), as an
/// element of Q[S_m] with m = |shape| + offset of the largest entry.
GroupAlgebraElement young_symmetrizer(const YoungTableau& t, int degree);
inline GroupAlgebraElement young_symmetrizer(const YoungTableau& t) {
  return young_symmetrizer(t, t.shape().size());
}

/// e_beta = (dim V_beta / m!) sum_sigma chi_beta(sigma) sigma. Throws
/// std::invalid_argument when characteristic is positive and <= m.
GroupAlgebraElement central_idempotent(const Partition& beta, int characteristic = 0,
                                       const ProductLimits& limits = {});

}  // namespace schurcert
