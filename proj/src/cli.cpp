#include "schurcert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "schurcert/certifier.hpp"
#include "schurcert/characters.hpp"
#include "schurcert/json_io.hpp"
#include "schurcert/littlewood_richardson.hpp"
#include "schurcert/oracle_check.hpp"
#include "schurcert/trace_polynomials.hpp"

namespace schurcert::cli {

namespace {

struct Settings {
  int characteristic = 0;
  std::optional<int> max_m;
  bool pretty = false;
};

ProductLimits product_limits(const Settings& s) {
  ProductLimits limits;
  if (s.max_m) limits.max_degree = *s.max_m;
  return limits;
}

void emit(std::ostream& out, Json document, const Settings& s) {
  document["version"] = version();
  out << (s.pretty ? document.dump(2) : document.dump()) << '\n';
}

int fset(const Partition& lambda, const Settings& s, std::ostream& out) {
  Json doc = {{"lambda", to_json(lambda)},
              {"R", to_json(r_set(lambda))},
              {"T", to_json(t_set(lambda))},
              {"F", to_json(f_set(lambda))}};
  if (s.characteristic != 0) {
    const Field field(s.characteristic);
    std::set<int> residues;
    for (int x : f_set(lambda)) residues.insert(static_cast<int>(field.reduce(x)));
    doc["char"] = s.characteristic;
    doc["F_residues"] = to_json(residues);
  }
  emit(out, std::move(doc), s);
  return ok;
}

int poly(const Partition& beta, const std::string& method, const std::optional<Partition>& alpha_arg,
         const Settings& s, std::ostream& out) {
  Json doc = {{"beta", to_json(beta)}, {"method", method}, {"roots", to_json(root_set(beta))}};
  if (method == "closed") {
    doc["p"] = to_json(p_closed(beta));
  } else if (method == "charsum") {
    doc["p"] = to_json(p_charsum(beta));
  } else {
    if (beta.size() < 1) throw std::invalid_argument("beta must be a partition of m >= 1");
    const Partition alpha = alpha_arg ? *alpha_arg : *remove_boxes(beta, 1).begin();
    doc["alpha"] = to_json(alpha);
    if (method == "bruteforce") {
      doc["p"] = to_json(p_bruteforce(alpha, beta, product_limits(s)));
    } else {
      if (!add_box(alpha).contains(beta))
        throw std::invalid_argument(beta.to_string() + " is not " + alpha.to_string() + " plus a box");
      doc["p"] = to_json(young_trace_polynomial(alpha, beta, product_limits(s)));
    }
  }
  emit(out, std::move(doc), s);
  return ok;
}

int character(const std::vector<std::string>& positional, std::optional<int> table, const Settings& s,
              std::ostream& out) {
  if (table) {
    if (*table < 0) throw ParseError("--table needs m >= 0");
    emit(out, to_json(character_table(*table)), s);
    return ok;
  }
  if (positional[0].empty() || positional[1].empty())
    throw ParseError("char needs <partition> <cycle-type>, or --table <m>");
  const Partition beta = parse_partition(positional[0]);
  const Partition type = parse_partition(positional[1]);
  emit(out, {{"beta", to_json(beta)}, {"cycle_type", to_json(type)}, {"chi", chi(beta, type)}}, s);
  return ok;
}

int lr(const std::vector<std::string>& positional, const std::string& method, const Settings& s, std::ostream& out) {
  const LRQuery q{parse_partition(positional[0]), parse_partition(positional[1]), parse_partition(positional[2])};
  Json doc = {{"lambda", to_json(q.lambda)}, {"mu", to_json(q.mu)}, {"nu", to_json(q.nu)}};
  std::optional<std::int64_t> by_characters;
  std::optional<std::int64_t> by_tableaux;
  Json methods = Json::array();
  if (method != "tableaux") {
    by_characters = lr_coefficient(q);
    methods.push_back("character");
  }
  if (method != "character") {
    by_tableaux = is_contained(q.mu, q.lambda) ? lr_by_tableaux(q) : 0;
    methods.push_back("tableaux");
  }
  if (by_characters && by_tableaux && *by_characters != *by_tableaux)
    throw std::logic_error("LR methods disagree: character " + std::to_string(*by_characters) + ", tableaux " +
                           std::to_string(*by_tableaux));
  doc["N"] = by_characters ? *by_characters : *by_tableaux;
  doc["methods"] = methods;
  emit(out, std::move(doc), s);
  return ok;
}

int certify_command(const Partition& lambda, long d, bool no_search, const Settings& s, std::ostream& out) {
  const CertifyResult result = certify(lambda, d, s.characteristic, CertifyOptions{!no_search});
  emit(out, to_json(result), s);
  return std::holds_alternative<CounterexampleReport>(result) ? counterexample : ok;
}

int verify_command(const std::string& source, const Settings& s, std::istream& in, std::ostream& out) {
  std::string text;
  if (source == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(source);
    if (!file) throw ParseError("cannot open " + source);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  Json document;
  try {
    document = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const CertifyResult parsed = certify_result_from_json(document);
  OracleLimits limits;
  limits.products = product_limits(s);
  const VerificationResult result =
      std::holds_alternative<Certificate>(parsed) ? verify_certificate(std::get<Certificate>(parsed))
                                                  : verify_counterexample(std::get<CounterexampleReport>(parsed), limits);
  Json doc = {{"kind", document.value("kind", "certificate")},
              {"valid", result.valid},
              {"diagnostics", result.diagnostics},
              {"oracle_checked", result.oracle_checked}};
  emit(out, std::move(doc), s);
  return result.valid ? ok : computation_error;
}

int oracle_check(int max_dim, const Settings& s, std::ostream& out) {
  OracleCheckOptions options;
  if (s.max_m) options.max_m = *s.max_m;
  options.max_total_dim = max_dim;
  options.limits.products = product_limits(s);
  if (options.max_m > options.limits.products.max_degree) options.limits.products.max_degree = options.max_m;
  const std::vector<OracleCheckRow> rows = run_oracle_checks(options);
  Json table = Json::array();
  bool all = true;
  for (const OracleCheckRow& row : rows) {
    all = all && row.passed;
    table.push_back({{"name", row.name}, {"passed", row.passed}, {"cases", row.cases}, {"failures", row.failures}});
  }
  emit(out, {{"max_m", options.max_m}, {"max_total_dim", max_dim}, {"checks", table}, {"passed", all}}, s);
  return all ? ok : computation_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Schur functor semisimplicity certificates", "schurcert"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string("schurcert ") + version());

  Settings settings;
  bool json_flag = false;
  app.add_option("--char", settings.characteristic, "Field characteristic: 0 or a prime")
      ->check([](const std::string& text) -> std::string {
        try {
          Field{std::stoi(text)};
        } catch (const std::exception&) {
          return "characteristic must be 0 or a prime";
        }
        return {};
      });
  app.add_option("--max-m", settings.max_m, "Override the brute-force degree cap")->check(CLI::PositiveNumber);
  auto* pretty = app.add_flag("--pretty", settings.pretty, "Indented JSON output");
  app.add_flag("--json", json_flag, "Compact JSON output (default)")->excludes(pretty);

  std::string partition_text;
  auto* fset_cmd = app.add_subcommand("fset", "F(lambda) = R(lambda) minus T(lambda)");
  fset_cmd->add_option("lambda", partition_text, "Partition, e.g. [2,1]")->required();

  std::string poly_method = "closed";
  std::string alpha_text;
  auto* poly_cmd = app.add_subcommand("poly", "Trace polynomial p_beta(d)");
  poly_cmd->add_option("beta", partition_text, "Partition, e.g. [2,1]")->required();
  poly_cmd->add_option("--method", poly_method, "closed, charsum, bruteforce or young")
      ->check(CLI::IsMember({"closed", "charsum", "bruteforce", "young"}));
  poly_cmd->add_option("--alpha", alpha_text, "Smaller partition for bruteforce and young");

  std::vector<std::string> char_args(2);
  std::optional<int> table;
  auto* char_cmd = app.add_subcommand("char", "Character value chi_beta(cycle type), or a full table");
  char_cmd->add_option("beta", char_args[0], "Partition");
  char_cmd->add_option("cycle_type", char_args[1], "Cycle type, as a partition");
  char_cmd->add_option("--table", table, "Print the character table of S_m");

  std::vector<std::string> lr_args(3);
  std::string lr_method = "both";
  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient N^lambda_{mu,nu}");
  lr_cmd->add_option("lambda", lr_args[0], "Partition")->required();
  lr_cmd->add_option("mu", lr_args[1], "Partition")->required();
  lr_cmd->add_option("nu", lr_args[2], "Partition")->required();
  lr_cmd->add_option("--method", lr_method, "character, tableaux or both")
      ->check(CLI::IsMember({"character", "tableaux", "both"}));

  long d = 0;
  bool no_search = false;
  auto* certify_cmd = app.add_subcommand("certify", "Certificate or counterexample for (lambda, d)");
  certify_cmd->add_option("lambda", partition_text, "Partition, e.g. [2,1]")->required();
  certify_cmd->add_option("--d", d, "Dimension d")->required();
  certify_cmd->add_flag("--no-search", no_search, "Fail instead of falling back to exhaustive search");

  std::string source = "-";
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate or counterexample document");
  verify_cmd->add_option("file", source, "Path, or - for stdin");

  int max_dim = 3;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Concrete super vector space identity table");
  oracle_cmd->add_option("--max-dim", max_dim, "Largest r + s")->check(CLI::Range(1, 8));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  }

  try {
    if (*fset_cmd) return fset(parse_partition(partition_text), settings, out);
    if (*poly_cmd) {
      std::optional<Partition> alpha;
      if (!alpha_text.empty()) alpha = parse_partition(alpha_text);
      return poly(parse_partition(partition_text), poly_method, alpha, settings, out);
    }
    if (*char_cmd) return character(char_args, table, settings, out);
    if (*lr_cmd) return lr(lr_args, lr_method, settings, out);
    if (*certify_cmd) return certify_command(parse_partition(partition_text), d, no_search, settings, out);
    if (*verify_cmd) return verify_command(source, settings, in, out);
    if (*oracle_cmd) return oracle_check(max_dim, settings, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return computation_error;
  }
  return parse_error;
}

}  // namespace schurcert::cli
