#include "schurcert/json_io.hpp"

#include <sstream>

#include "schurcert/trace_polynomials.hpp"

namespace schurcert {

const char* version() { return SCHURCERT_VERSION; }

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

long integer_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long>();
}

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string " + j.dump());
    return z;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

std::set<int> int_set_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::set<int> out;
  for (const Json& x : j) out.insert(static_cast<int>(integer_from_json(x, what)));
  return out;
}

}  // namespace

Json to_json(const Partition& lambda) { return lambda.parts(); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a partition must be a JSON array, got " + j.dump());
  std::vector<int> parts;
  for (const Json& x : j) {
    if (!x.is_number_integer()) throw ParseError("partition parts must be integers, got " + j.dump());
    parts.push_back(x.get<int>());
  }
  try {
    return Partition(parts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Partition parse_partition(const std::string& text) {
  std::string body = text;
  if (body.empty() || body.front() != '[') body = "[" + body + "]";
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::parse_error&) {
    throw ParseError("cannot parse partition '" + text + "'");
  }
  return partition_from_json(j);
}

Json to_json(const PartitionSet& set) {
  Json out = Json::array();
  for (const Partition& p : set) out.push_back(to_json(p));
  return out;
}

Json to_json(const std::set<int>& values) {
  Json out = Json::array();
  for (int v : values) out.push_back(v);
  return out;
}

Json to_json(const Rational& r) { return Json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("a rational must be [num, den], got " + j.dump());
  const Integer den = integer_from_json(j[1]);
  if (den == 0) throw ParseError("zero denominator");
  return ratio(integer_from_json(j[0]), den);
}

Json to_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (const Rational& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Permutation& sigma) { return sigma.images(); }

Json to_json(const GroupAlgebraElement& x) {
  Json out = Json::array();
  for (const auto& [sigma, c] : x.terms())
    out.push_back(Json::array({to_json(sigma), integer_to_json(c.get_num()), integer_to_json(c.get_den())}));
  return out;
}

Json to_json(const CharacterTable& table) {
  Json rows = Json::array();
  Json columns = Json::array();
  for (const Partition& p : table.partitions) rows.push_back(to_json(p));
  for (const CycleType& t : table.cycle_types) columns.push_back(to_json(t));
  return {{"degree", table.degree}, {"partitions", rows}, {"cycle_types", columns}, {"values", table.values}};
}

Json to_json(const Witness& w) {
  return {{"i", w.i},
          {"mu_prime", to_json(w.mu_prime)},
          {"nu", to_json(w.nu)},
          {"mu", to_json(w.mu)},
          {"nu_prime", to_json(w.nu_prime)},
          {"a_forbidden", to_json(w.a_forbidden)},
          {"b_forbidden", to_json(w.b_forbidden)},
          {"source", to_string(w.source)}};
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.i = static_cast<int>(integer_from_json(field(j, "i"), "i"));
  w.mu_prime = partition_from_json(field(j, "mu_prime"));
  w.nu = partition_from_json(field(j, "nu"));
  w.mu = partition_from_json(field(j, "mu"));
  w.nu_prime = partition_from_json(field(j, "nu_prime"));
  w.a_forbidden = j.contains("a_forbidden") ? int_set_from_json(j["a_forbidden"], "a_forbidden") : root_set(w.mu);
  w.b_forbidden = j.contains("b_forbidden") ? int_set_from_json(j["b_forbidden"], "b_forbidden") : root_set(w.nu_prime);
  if (j.contains("source")) {
    if (!j["source"].is_string()) throw ParseError("source must be a string");
    try {
      w.source = witness_source_from_string(j["source"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return w;
}

Json to_json(const Certificate& c) {
  Json branches = Json::object();
  for (const auto& [b, w] : c.branches) branches[std::to_string(b)] = to_json(w);
  return {{"kind", "certificate"}, {"lambda", to_json(c.lambda)}, {"d", c.d},
          {"char", c.characteristic}, {"generic", to_json(c.generic)}, {"branches", branches},
          {"uses_search", c.uses_search()}, {"version", version()}};
}

Json to_json(const CounterexampleReport& r) {
  Json out = {{"kind", "counterexample"}, {"lambda", to_json(r.lambda)}, {"d", r.d},
              {"char", r.characteristic}, {"family", to_string(r.family)}, {"version", version()}};
  if (r.family == CounterexampleFamily::super) {
    out["r"] = r.r;
    out["s"] = r.s;
  }
  return out;
}

Json to_json(const CertifyResult& result) {
  return std::visit([](const auto& value) { return to_json(value); }, result);
}

CertifyResult certify_result_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const std::string kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "certificate";
  const Partition lambda = partition_from_json(field(j, "lambda"));
  const long d = integer_from_json(field(j, "d"), "d");
  const int characteristic = static_cast<int>(integer_from_json(field(j, "char"), "char"));

  if (kind == "counterexample") {
    CounterexampleReport r{lambda, d, characteristic, CounterexampleFamily::super, 0, 0};
    try {
      r.family = counterexample_family_from_string(field(j, "family").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    } catch (const Json::type_error&) {
      throw ParseError("family must be a string");
    }
    if (r.family == CounterexampleFamily::super) {
      r.r = static_cast<int>(integer_from_json(field(j, "r"), "r"));
      r.s = static_cast<int>(integer_from_json(field(j, "s"), "s"));
    }
    return r;
  }
  if (kind != "certificate") throw ParseError("unknown document kind '" + kind + "'");

  Certificate c{lambda, d, characteristic, witness_from_json(field(j, "generic")), {}};
  const Json& branches = field(j, "branches");
  if (!branches.is_object()) throw ParseError("branches must be an object keyed by b");
  for (const auto& [key, value] : branches.items()) {
    std::size_t used = 0;
    int b = 0;
    try {
      b = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size()) throw ParseError("branch key '" + key + "' is not an integer");
    c.branches.emplace(b, witness_from_json(value));
  }
  return c;
}

}  // namespace schurcert
