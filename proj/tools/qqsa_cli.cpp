#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qqsa/suites.hpp"

using namespace qqsa::suites;

namespace {

constexpr int kConfigError = 2;

std::vector<long> parse_labels(const std::string& text, std::size_t rank) {
  std::vector<long> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--lambda: bad label '" + item + "'");
    }
  }
  if (out.size() != rank) throw ConfigError("--lambda: expected " + std::to_string(rank) + " labels");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for multi-parameter quantum groups built as quantum quasi-symmetric algebras"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> format;
  std::optional<std::size_t> bound;
  std::optional<std::uint64_t> seed;
  bool timings = false;
  app.add_option("--config", config_path, "Run configuration file")->required()->check(CLI::ExistingFile);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--bound", bound, "J-reduction length bound")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized property suites");
  app.add_flag("--timings", timings, "Include per-check wall time in the report");

  auto* check = app.add_subcommand("check", "Relation, Hopf and closed-form suites");
  check->require_subcommand(1);
  auto* relations = check->add_subcommand("relations", "R1-R7 residuals, R5 modulo J");
  auto* hopf = check->add_subcommand("hopf", "Coassociativity, counit, associativity, bialgebra, antipode");
  auto* closed = check->add_subcommand("closed-forms", "ad-power and E/F power formulas");

  auto* pairing = app.add_subcommand("pairing", "Skew pairing checks");
  pairing->require_subcommand(1);
  auto* gram = pairing->add_subcommand("gram", "Gram matrices of graded pieces");
  std::optional<std::size_t> max_height;
  gram->add_option("--max-height", max_height, "Largest height of beta")->check(CLI::PositiveNumber);

  auto* module = app.add_subcommand("module", "Highest weight modules R(1)");
  std::vector<std::string> lambda_text;
  module->add_option("--lambda", lambda_text, "Dominant weight labels, comma separated (repeatable)");

  auto* twist_cmd = app.add_subcommand("twist", "Cocycle twist to q-hat");
  std::string qhat = "one-parameter";
  twist_cmd->add_option("--qhat", qhat, "Twist target")->check(CLI::IsMember({"one-parameter"}));

  auto* smallqg = app.add_subcommand("smallqg", "Root of unity checks");
  std::optional<std::uint32_t> ell;
  smallqg->add_option("--ell", ell, "Order of the root of unity")->check(CLI::PositiveNumber);
  std::vector<std::string> smallqg_lambda;
  smallqg->add_option("--lambda", smallqg_lambda, "Weights to test against the alcove (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kConfigError;
  }

  Report report;
  RunConfig cfg;
  try {
    cfg = parse_config_file(config_path);
    if (format) cfg.format = *format;
    if (bound) cfg.bound = *bound;
    if (seed) cfg.seed = *seed;
    if (max_height) cfg.max_height = *max_height;
    const auto& texts = module->parsed() ? lambda_text : smallqg_lambda;
    if (!texts.empty()) {
      cfg.lambdas.clear();
      for (const auto& t : texts) cfg.lambdas.push_back(parse_labels(t, cfg.datum.rank()));
    }
    if (smallqg->parsed()) {
      if (ell) cfg.ell = *ell;
      if (cfg.ell == 0) throw ConfigError("smallqg: set --ell or ell in the config");
    }

    const auto t0 = std::chrono::steady_clock::now();
    if (relations->parsed()) report = check_relations(cfg);
    if (hopf->parsed()) report = check_hopf(cfg);
    if (closed->parsed()) report = check_closed_forms(cfg);
    if (gram->parsed()) report = pairing_gram(cfg);
    if (module->parsed()) report = modules(cfg);
    if (twist_cmd->parsed()) report = twist(cfg);
    if (smallqg->parsed()) report = small_quantum_group(cfg);
    if (timings) {
      std::cerr << "total " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
                << " s\n";
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  if (cfg.format == "json") {
    report.write_json(std::cout, timings);
  } else {
    report.write_table(std::cout, timings);
  }
  return report.exit_code();
}
