#include <doctest.h>

#include <sstream>

#include "schurcert/cli.hpp"
#include "schurcert/json_io.hpp"

using namespace schurcert;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fset") {
  const Outcome r = run_cli({"fset", "[1,1,1]"});
  CHECK(r.code == 0);
  CHECK(r.json()["F"].dump() == "[2,3]");
  CHECK(r.json()["version"] == version());
  const Outcome modular = run_cli({"--char", "3", "fset", "[1,1,1]"});
  CHECK(modular.json()["F_residues"].dump() == "[0,2]");
}

TEST_CASE("poly") {
  const Outcome r = run_cli({"poly", "[2,1]"});
  CHECK(r.code == 0);
  CHECK(r.json()["p"].dump() == "[[-1,6],[0,1],[1,6]]");
  for (const char* method : {"charsum", "bruteforce"})
    CHECK(run_cli({"poly", "[2,1]", "--method", method}).json()["p"] == r.json()["p"]);
  CHECK(run_cli({"poly", "[2,1]", "--method", "young", "--alpha", "[1,1]"}).code == 0);
  CHECK(run_cli({"poly", "[2,1]", "--method", "bruteforce", "--alpha", "[3]"}).code == 1);
  CHECK(run_cli({"poly", "[5,3]", "--method", "bruteforce"}).code == 1);
  CHECK(run_cli({"--max-m", "8", "poly", "[2]", "--method", "bruteforce"}).code == 0);
}

TEST_CASE("char and lr") {
  CHECK(run_cli({"char", "[2,1]", "[3]"}).json()["chi"] == -1);
  const Json table = run_cli({"char", "--table", "3"}).json();
  CHECK(table["values"].dump() == "[[1,1,1],[-1,0,2],[1,-1,1]]");
  const Json lr = run_cli({"lr", "[4,2]", "[2,1]", "[2,1]"}).json();
  CHECK(lr["N"] == 1);
  CHECK(lr["methods"].dump() == R"(["character","tableaux"])");
  CHECK(run_cli({"lr", "[2,2]", "[1,1]", "[2]", "--method", "character"}).json()["N"] == 0);
  CHECK(run_cli({"lr", "[2,2]", "[3]", "[1]"}).json()["N"] == 0);
}

TEST_CASE("certify and verify") {
  const Outcome cert = run_cli({"certify", "[2,1]", "--d", "5"});
  CHECK(cert.code == 0);
  CHECK(cert.json()["kind"] == "certificate");
  const Outcome checked = run_cli({"verify", "-"}, cert.out);
  CHECK(checked.code == 0);
  CHECK(checked.json()["valid"] == true);

  const Outcome report = run_cli({"certify", "[1,1,1]", "--d", "3"});
  CHECK(report.code == 10);
  CHECK(report.json()["kind"] == "counterexample");
  CHECK(run_cli({"verify", "-"}, report.out).code == 0);

  CHECK(run_cli({"certify", "[2,1,1]", "--d", "3", "--no-search"}).code == 1);
  CHECK(run_cli({"certify", "[2,1]", "--d=-4"}).code == 0);
  CHECK(run_cli({"certify", "[2,1]", "--d", "-4"}).code == 0);

  Json tampered = cert.json();
  tampered["d"] = 0;
  tampered["branches"].erase("1");
  const Outcome rejected = run_cli({"verify", "-"}, tampered.dump());
  CHECK(rejected.code == 1);
  CHECK(rejected.json()["valid"] == false);
}

TEST_CASE("output is byte-stable and pretty printing parses back") {
  const Outcome a = run_cli({"certify", "[3,2,1]", "--d", "7"});
  const Outcome b = run_cli({"certify", "[3,2,1]", "--d", "7"});
  CHECK(a.out == b.out);
  const Outcome pretty = run_cli({"certify", "[3,2,1]", "--d", "7", "--pretty"});
  CHECK(pretty.out != a.out);
  CHECK(pretty.json() == a.json());
}

TEST_CASE("exit codes for bad input") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"fset"}).code == 2);
  CHECK(run_cli({"fset", "[1,2]"}).code == 2);
  CHECK(run_cli({"--char", "4", "fset", "[1]"}).code == 2);
  CHECK(run_cli({"certify", "[2,1]"}).code == 2);
  CHECK(run_cli({"verify", "-"}, "{not json").code == 2);
  CHECK(run_cli({"verify", "/nonexistent/file.json"}).code == 2);
  CHECK(run_cli({"--char", "3", "certify", "[2,1]", "--d", "1"}).code == 1);
  CHECK(run_cli({"bogus"}).code == 2);
}

TEST_CASE("oracle-check") {
  const Outcome r = run_cli({"--max-m", "3", "oracle-check", "--max-dim", "2"});
  CHECK(r.code == 0);
  CHECK(r.json()["passed"] == true);
  CHECK(r.json()["checks"].size() == 5);
}
