#include <doctest.h>

#include "schurcert/json_io.hpp"
#include "schurcert/trace_polynomials.hpp"

using namespace schurcert;

TEST_CASE("partitions") {
  CHECK(to_json(Partition{2, 1}).dump() == "[2,1]");
  CHECK(to_json(Partition{}).dump() == "[]");
  CHECK(partition_from_json(Json::parse("[3,1,0]")) == Partition{3, 1});
  CHECK(parse_partition("[2,2]") == Partition{2, 2});
  CHECK(parse_partition("2,2,1") == Partition{2, 2, 1});
  CHECK(parse_partition("[]") == Partition{});
  CHECK_THROWS_AS(parse_partition("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_partition("[1,"), ParseError);
  CHECK_THROWS_AS(partition_from_json(Json::parse("[1.5]")), ParseError);
  CHECK(to_json(remove_boxes(Partition{2, 1}, 1)).dump() == "[[2],[1,1]]");
}

TEST_CASE("rationals and polynomials") {
  CHECK(to_json(make_rational(-2, 4)).dump() == "[-1,2]");
  CHECK(rational_from_json(Json::parse("[3,-6]")) == make_rational(-1, 2));
  const Rational big = ratio(factorial(30) + 1, 7);
  CHECK(rational_from_json(to_json(big)) == big);
  CHECK(to_json(big)[0].is_string());
  CHECK_THROWS_AS(rational_from_json(Json::parse("[1,0]")), ParseError);
  CHECK(to_json(p_closed(Partition{2, 1})).dump() == "[[-1,6],[0,1],[1,6]]");
}

TEST_CASE("group algebra elements") {
  GroupAlgebraElement x(2);
  x.add(Permutation({2, 1}), make_rational(-1, 2));
  x.add(Permutation({1, 2}), 1);
  CHECK(to_json(x).dump() == "[[[1,2],1,1],[[2,1],-1,2]]");
}

TEST_CASE("certificates round-trip") {
  for (long d : {-4L, 0L, 5L}) {
    const CertifyResult original = certify(Partition{3, 1}, d);
    const Json document = to_json(original);
    CHECK(document.contains("version"));
    CHECK(certify_result_from_json(Json::parse(document.dump())) == original);
  }
  const CertifyResult report = certify(Partition{1, 1, 1}, 3);
  CHECK(to_json(report)["kind"] == "counterexample");
  CHECK(certify_result_from_json(to_json(report)) == report);
}

TEST_CASE("minimal witness schema") {
  Json document = to_json(certify(Partition{2, 1}, 5));
  document.erase("kind");
  for (auto& [key, w] : document["branches"].items()) {
    w.erase("a_forbidden");
    w.erase("b_forbidden");
    w.erase("source");
  }
  const CertifyResult parsed = certify_result_from_json(document);
  REQUIRE(std::holds_alternative<Certificate>(parsed));
  CHECK(verify_certificate(std::get<Certificate>(parsed)).valid);

  document["branches"]["x"] = document["generic"];
  CHECK_THROWS_AS(certify_result_from_json(document), ParseError);
  CHECK_THROWS_AS(certify_result_from_json(Json::parse(R"({"lambda":[1]})")), ParseError);
  CHECK_THROWS_AS(certify_result_from_json(Json::parse(R"({"kind":"other","lambda":[1],"d":0,"char":0})")),
                  ParseError);
}
