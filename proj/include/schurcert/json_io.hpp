#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "schurcert/certifier.hpp"
#include "schurcert/characters.hpp"
#include "schurcert/group_algebra.hpp"
#include "schurcert/partition.hpp"
#include "schurcert/polynomial.hpp"
#include "schurcert/rational.hpp"

namespace schurcert {

using Json = nlohmann::json;

/// Malformed or ill-typed JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Library version, embedded in every CLI document.
const char* version();

/// [2,1]; the empty partition is [].
Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);
/// Parses text such as "[2,1]" or "2,1".
Partition parse_partition(const std::string& text);

Json to_json(const PartitionSet& set);
Json to_json(const std::set<int>& values);

/// [num, den]; components that do not fit in 64 bits are decimal strings.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// Ascending [num, den] pairs.
Json to_json(const RationalPolynomial& p);

Json to_json(const Permutation& sigma);
/// [[images], num, den] triples in increasing permutation order.
Json to_json(const GroupAlgebraElement& x);

/// Rows indexed by partitions, columns by cycle types, both descending.
Json to_json(const CharacterTable& table);

Json to_json(const Witness& w);
/// The i, mu_prime, nu, mu and nu_prime fields are required; absent forbidden
/// sets are recomputed and an absent source defaults to "general".
Witness witness_from_json(const Json& j);

Json to_json(const Certificate& c);
Json to_json(const CounterexampleReport& r);
Json to_json(const CertifyResult& result);
/// Dispatches on "kind"; a document without "kind" is read as a certificate.
CertifyResult certify_result_from_json(const Json& j);

}  // namespace schurcert
