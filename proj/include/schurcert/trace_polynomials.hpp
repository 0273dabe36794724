#pragma once

#include <set>

#include "schurcert/group_algebra.hpp"
#include "schurcert/partition.hpp"
#include "schurcert/polynomial.hpp"

namespace schurcert {

/// cp_beta(d) = prod over boxes (i,j) of (d + j - i).
RationalPolynomial content_polynomial(const Partition& beta);

/// cp_beta(d) / (m! d). Independent of alpha; requires |beta| >= 1.
RationalPolynomial p_closed(const Partition& beta);

/// (1 / (m! dim V_beta)) sum_sigma chi_beta(sigma) d^{N(sigma)-1}, summed over
/// cycle types weighted by class size.
RationalPolynomial p_charsum(const Partition& beta);

/// sum_sigma f(sigma) d^{N(sigma)-1} for x = sum_sigma f(sigma) sigma.
RationalPolynomial partial_trace_polynomial(const GroupAlgebraElement& x);

/// Expands (id ⊗ e_alpha) e_beta over S_m and normalizes its partial-trace
/// polynomial by dim V_alpha * dim V_beta. Throws std::invalid_argument when
/// beta is not alpha plus a box, CapExceeded above the product cap.
RationalPolynomial p_bruteforce(const Partition& alpha, const Partition& beta, const ProductLimits& limits = {});

/// Unnormalized partial-trace polynomial of (id ⊗ c_alpha) c_beta for the
/// canonical tableaux, c_alpha acting on the factors 2..m.
RationalPolynomial young_trace_polynomial(const Partition& alpha, const Partition& beta,
                                          const ProductLimits& limits = {});

/// Integer zeros of p_closed(beta): {1-q, ..., p-1}, without 0 when beta is a hook.
std::set<int> root_set(const Partition& beta);

}  // namespace schurcert
