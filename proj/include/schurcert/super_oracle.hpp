#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "schurcert/group_algebra.hpp"
#include "schurcert/partition.hpp"
#include "schurcert/rational.hpp"

namespace schurcert {

/// The super vector space k^{even|odd}. Basis vectors 0..even-1 are even,
/// the remaining `odd` ones are odd.
struct SuperSpace {
  int even = 0;
  int odd = 0;

  int total() const { return even + odd; }
  int superdimension() const { return even - odd; }
  int parity(int basis_index) const { return basis_index < even ? 0 : 1; }
};

struct OracleLimits {
  std::size_t max_dimension = 4096;  // cap on (r+s)^m
  ProductLimits products;
};

class NonScalarTrace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse square matrix over Q on a Z/2-graded space.
class GradedMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  explicit GradedMatrix(std::vector<int> parities);
  static GradedMatrix identity(std::vector<int> parities);

  std::size_t dimension() const { return parities_.size(); }
  int parity(std::size_t i) const { return parities_[i]; }
  const std::vector<int>& parities() const { return parities_; }
  const std::vector<Row>& rows() const { return rows_; }

  Rational at(std::size_t i, std::size_t j) const;
  void add(std::size_t i, std::size_t j, const Rational& value);

  /// The scalar c if this matrix equals c * identity.
  std::optional<Rational> scalar_of_identity() const;
  /// Maps even basis vectors to even vectors and odd to odd.
  bool is_even() const;

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  bool operator==(const GradedMatrix&) const = default;

 private:
  std::vector<int> parities_;
  std::vector<Row> rows_;
};

/// Parities of the basis e_{i_1} ⊗ ... ⊗ e_{i_m}, indexed with i_1 most significant.
std::vector<int> tensor_parities(const SuperSpace& v, int m);

/// Koszul-signed place permutation: the factor in position k moves to
/// position sigma(k); each transposed pair of odd factors contributes -1.
GradedMatrix permutation_action(const Permutation& sigma, const SuperSpace& v, const OracleLimits& limits = {});

/// sum_i (-1)^{|i|} M[i][i].
Rational signed_trace(const GradedMatrix& m);

/// Super partial trace over the last m-1 tensor factors; the result acts on v.
GradedMatrix partial_trace_last(const GradedMatrix& matrix, const SuperSpace& v, int m);

/// Linear extension of permutation_action.
GradedMatrix apply_algebra_element(const GroupAlgebraElement& x, const SuperSpace& v, const OracleLimits& limits = {});

/// Exact rank by fraction-free sparse elimination.
std::size_t matrix_rank(const GradedMatrix& m);
/// Rank of the block of `m` on basis vectors of the given parity.
std::size_t matrix_rank(const GradedMatrix& m, int parity);

struct SchurRank {
  std::size_t total = 0;
  std::size_t even = 0;
  std::size_t odd = 0;
};

/// Rank of the Young symmetrizer of `t` acting on v^{⊗n}, split by parity.
SchurRank schur_rank(const YoungTableau& t, const SuperSpace& v, const OracleLimits& limits = {});
inline SchurRank schur_rank(const Partition& lambda, const SuperSpace& v, const OracleLimits& limits = {}) {
  return schur_rank(YoungTableau::canonical(lambda), v, limits);
}

/// Partial trace of the action of x; throws NonScalarTrace unless it is a
/// multiple of the identity.
Rational measure_partial_trace_scalar(const GroupAlgebraElement& x, const SuperSpace& v,
                                      const OracleLimits& limits = {});

/// Scalar of the partial trace of (id ⊗ e_alpha) e_beta on v, divided by
/// dim V_alpha * dim V_beta. Equals p_charsum(beta) at d = r - s.
Rational measure_p_scalar(const Partition& alpha, const Partition& beta, const SuperSpace& v,
                          const OracleLimits& limits = {});

}  // namespace schurcert
