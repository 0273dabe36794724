#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schurcert/super_oracle.hpp"

namespace schurcert {

struct OracleCheckOptions {
  int max_m = 4;          // largest tensor power
  int max_total_dim = 3;  // largest r + s
  OracleLimits limits;
};

struct OracleCheckRow {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few failing cases
};

/// Runs the concrete super vector space identities for every m <= max_m and
/// every (r, s) with 1 <= r + s <= max_total_dim:
///   partial_trace_cycles   partial trace of sigma is (r-s)^{N(sigma)-1} id
///   schur_rank_vanishing   the Schur functor vanishes iff (r+1, s+1) is a box
///   superdimension         even minus odd rank is dim V_lambda cp_lambda(r-s) / n!
///   conjugate_rank         rank on (r|s) equals rank of the conjugate on (s|r)
///   p_scalar               measured scalar equals p_charsum at r - s
std::vector<OracleCheckRow> run_oracle_checks(const OracleCheckOptions& options = {});

}  // namespace schurcert
