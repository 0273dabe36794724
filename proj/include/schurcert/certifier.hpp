#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "schurcert/littlewood_richardson.hpp"
#include "schurcert/partition.hpp"
#include "schurcert/super_oracle.hpp"

namespace schurcert {

/// The prime field F_p, or Q when the characteristic is 0. Integers are
/// compared through their residues.
class Field {
 public:
  /// Throws std::invalid_argument unless the characteristic is 0 or prime.
  explicit Field(int characteristic = 0);

  int characteristic() const { return characteristic_; }
  long reduce(long x) const;
  bool equal(long x, long y) const { return reduce(x) == reduce(y); }
  /// x lies in the image of `values` in the field.
  bool contains(const std::set<int>& values, long x) const;

 private:
  int characteristic_;
};

bool is_prime(int n);

/// Where a witness came from.
enum class WitnessSource {
  generic,                  // i = 1, mu' = (0), mu = (1)
  general,                  // row/column slices used when d lies outside R(lambda)
  non_rectangle,            // d = p for a non-rectangle
  non_rectangle_conjugate,  // d = -q, the conjugate construction
  no_box_3_2,               // d = 1 when (3,2) is not in lambda
  no_box_2_3,               // d = -1 when (2,3) is not in lambda, the conjugate construction
  hook,                     // d = 0 for a hook
  exhaustive_search,
};

std::string to_string(WitnessSource source);
WitnessSource witness_source_from_string(const std::string& name);

/// Data (i, mu', nu, mu, nu') meeting the hypotheses of the splitting criterion:
/// mu' in lambda - (n-i+1), nu in lambda - i, mu in mu'_+, nu' in nu_+, with
/// a outside root_set(mu) and b outside root_set(nu').
struct Witness {
  int i = 1;
  Partition mu_prime;
  Partition nu;
  Partition mu;
  Partition nu_prime;
  std::set<int> a_forbidden;
  std::set<int> b_forbidden;
  WitnessSource source = WitnessSource::general;

  bool operator==(const Witness&) const = default;
};

struct Certificate {
  Partition lambda;
  long d = 0;
  int characteristic = 0;
  Witness generic;
  std::map<int, Witness> branches;  // keyed by b in {1-q, ..., p-1}

  bool uses_search() const;
  bool operator==(const Certificate&) const = default;
};

enum class CounterexampleFamily { super, rectangle_top, rectangle_bottom_twist };

std::string to_string(CounterexampleFamily family);
CounterexampleFamily counterexample_family_from_string(const std::string& name);

struct CounterexampleReport {
  Partition lambda;
  long d = 0;
  int characteristic = 0;
  CounterexampleFamily family = CounterexampleFamily::super;
  int r = 0;  // even dimension, super family only
  int s = 0;  // odd dimension, super family only

  bool operator==(const CounterexampleReport&) const = default;
};

using CertifyResult = std::variant<Certificate, CounterexampleReport>;

/// Raised when no witness exists for some branch although d is outside F(lambda).
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CertifyOptions {
  bool allow_search = true;
};

/// d lies in the image of F(lambda) in the field.
bool in_f_set(const Partition& lambda, long d, const Field& field);

Witness generic_witness(const Partition& lambda);

/// Witness for branch b built from the constructive recipes alone, or
/// nullopt when none of the applicable recipes produces valid data.
std::optional<Witness> recipe_witness(const Partition& lambda, long d, int b, const Field& field,
                                      LrCalculator& lr = default_lr_calculator());

/// First valid witness in lexicographic order of (i, mu', nu, mu, nu').
std::optional<Witness> search_witness(const Partition& lambda, long d, int b, const Field& field,
                                      LrCalculator& lr = default_lr_calculator());

/// Smallest family proving d in G(lambda), if d lies in F(lambda).
std::optional<CounterexampleReport> counterexample_for(const Partition& lambda, long d, const Field& field);

/// Throws std::invalid_argument for |lambda| = 0 or an invalid characteristic,
/// CertificationFailure if some branch has no witness.
CertifyResult certify(const Partition& lambda, long d, int characteristic = 0, const CertifyOptions& options = {});

struct VerificationResult {
  bool valid = true;
  std::vector<std::string> diagnostics;
  bool oracle_checked = false;
};

/// Re-derives every hypothesis with fresh character and LR tables, checking
/// LR non-vanishing with both methods.
VerificationResult verify_certificate(const Certificate& certificate);

/// Checks the family conditions; small super cases are also confirmed by an
/// exact Schur projector rank of zero.
VerificationResult verify_counterexample(const CounterexampleReport& report, const OracleLimits& limits = {});

}  // namespace schurcert
