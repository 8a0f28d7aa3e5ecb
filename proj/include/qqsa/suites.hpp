#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qqsa/cartan.hpp"

namespace qqsa::suites {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParamSource { symbolic, one_parameter, numeric, root_of_unity };

struct RunConfig {
  CartanDatum datum = CartanDatum::of_type("A1");
  ParamSource params = ParamSource::symbolic;
  /// numeric mode only: variable name -> rational value
  std::map<std::string, mpq_class> values;
  /// root_of_unity mode, and the default order for smallqg
  std::uint32_t ell = 0;
  std::vector<std::vector<long>> lambdas;
  std::string qhat = "one-parameter";
  std::size_t max_length = 4;
  std::size_t max_height = 4;
  std::size_t bound = 4;
  std::size_t depth = 64;
  /// Also compute module raising matrices by J-reduction and compare.
  bool cross_check = false;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::string format = "table";
};

/// Parses `key = value` lines; values are JSON or a bare word, `#` starts a comment.
/// Throws ConfigError on unknown keys, bad values, missing datum or mixed modes.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

enum class Status { pass, fail, undecided };

struct Record {
  std::string check;
  std::string inputs;
  Status status = Status::pass;
  /// Certificate for a pass, counterexample or reason otherwise.
  std::string detail;
  double seconds = 0;
};

struct Report {
  std::vector<Record> records;

  void append(Report other);
  bool passed() const;
  std::size_t count(Status s) const;
  /// 0 when every record passes, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }

  /// One JSON object per line.
  void write_json(std::ostream& os, bool timings) const;
  void write_table(std::ostream& os, bool timings) const;
};

std::string status_name(Status s);

Report check_relations(const RunConfig& cfg);
Report check_hopf(const RunConfig& cfg);
Report check_closed_forms(const RunConfig& cfg);
Report pairing_gram(const RunConfig& cfg);
Report modules(const RunConfig& cfg);
Report twist(const RunConfig& cfg);
Report small_quantum_group(const RunConfig& cfg);

/// prod over positive roots of (lambda + rho, alpha) / (rho, alpha).
mpq_class weyl_dimension(const CartanDatum& d, const Weight& lambda);

}  // namespace qqsa::suites
