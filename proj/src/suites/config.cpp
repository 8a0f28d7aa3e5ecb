#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qqsa/suites.hpp"

namespace qqsa::suites {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

json parse_value(const std::string& text) {
  json v = json::parse(text, nullptr, false);
  if (v.is_discarded()) return json(text);
  return v;
}

std::size_t positive(const json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() <= 0) throw ConfigError(key + ": expected a positive integer");
  return v.get<std::size_t>();
}

std::vector<long> int_list(const json& v, const std::string& key) {
  if (!v.is_array()) throw ConfigError(key + ": expected a list of integers");
  std::vector<long> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ConfigError(key + ": expected a list of integers");
    out.push_back(x.get<long>());
  }
  return out;
}

ParamSource param_source(const json& v) {
  const std::string s = v.is_string() ? v.get<std::string>() : "";
  if (s == "symbolic") return ParamSource::symbolic;
  if (s == "one-parameter") return ParamSource::one_parameter;
  if (s == "numeric") return ParamSource::numeric;
  if (s == "root-of-unity") return ParamSource::root_of_unity;
  throw ConfigError("params: expected symbolic, one-parameter, numeric or root-of-unity");
}

std::string json_escape(const std::string& s) { return json(s).dump(); }

}  // namespace

RunConfig parse_config(std::istream& in) {
  std::map<std::string, json> kv;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError("line " + std::to_string(no) + ": empty key or value");
    if (!kv.emplace(key, parse_value(value)).second) throw ConfigError("duplicate key " + key);
  }

  static const std::set<std::string> known{"type",  "cartan",      "symmetrizers", "params",     "values",
                                           "ell",   "lambda",      "qhat",         "max_length", "max_height",
                                           "bound", "depth",       "cross_check",  "seed",       "samples",
                                           "format"};
  for (const auto& [k, v] : kv) {
    if (!known.contains(k)) throw ConfigError("unknown key " + k);
  }

  RunConfig cfg;
  try {
    if (kv.contains("type") && kv.contains("cartan")) throw ConfigError("type and cartan are exclusive");
    if (kv.contains("type")) {
      if (!kv["type"].is_string()) throw ConfigError("type: expected a name such as A2");
      cfg.datum = CartanDatum::of_type(kv["type"].get<std::string>());
    } else if (kv.contains("cartan")) {
      std::vector<std::vector<int>> a;
      if (!kv["cartan"].is_array()) throw ConfigError("cartan: expected a list of rows");
      for (const auto& row : kv["cartan"]) {
        std::vector<int> r;
        for (const long x : int_list(row, "cartan")) r.push_back(static_cast<int>(x));
        a.push_back(std::move(r));
      }
      std::vector<int> d(a.size(), 1);
      if (kv.contains("symmetrizers")) {
        d.clear();
        for (const long x : int_list(kv["symmetrizers"], "symmetrizers")) d.push_back(static_cast<int>(x));
      }
      cfg.datum = CartanDatum(std::move(a), std::move(d));
    } else {
      throw ConfigError("no datum: set type or cartan");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("datum: ") + e.what());
  }
  if (kv.contains("symmetrizers") && !kv.contains("cartan")) throw ConfigError("symmetrizers requires cartan");
  const std::size_t n = cfg.datum.rank();

  if (kv.contains("params")) cfg.params = param_source(kv["params"]);
  if (kv.contains("values")) {
    if (cfg.params != ParamSource::numeric) throw ConfigError("values requires params = numeric");
    if (!kv["values"].is_object()) throw ConfigError("values: expected an object of name: \"p/q\"");
    for (const auto& [name, v] : kv["values"].items()) {
      const std::string text = v.is_string() ? v.get<std::string>() : v.dump();
      try {
        mpq_class x(text);
        x.canonicalize();
        if (x == 0) throw ConfigError("values: " + name + " must be nonzero");
        cfg.values[name] = x;
      } catch (const std::invalid_argument&) {
        throw ConfigError("values: " + name + " is not a rational number");
      }
    }
  }
  if (cfg.params == ParamSource::numeric) {
    const auto names = ParamMatrix::symbolic(cfg.datum).names();
    for (const auto& name : names) {
      if (!cfg.values.contains(name)) throw ConfigError("values: no value for " + name);
    }
    for (const auto& [name, v] : cfg.values) {
      if (std::find(names.begin(), names.end(), name) == names.end()) throw ConfigError("values: unknown " + name);
    }
  }
  if (kv.contains("ell")) {
    if (cfg.params != ParamSource::root_of_unity) throw ConfigError("ell requires params = root-of-unity");
    cfg.ell = static_cast<std::uint32_t>(positive(kv["ell"], "ell"));
  }
  if (cfg.params == ParamSource::root_of_unity && cfg.ell < 2) throw ConfigError("root-of-unity needs ell >= 2");

  if (kv.contains("lambda")) {
    const json& l = kv["lambda"];
    if (l.is_array() && !l.empty() && l[0].is_array()) {
      for (const auto& x : l) cfg.lambdas.push_back(int_list(x, "lambda"));
    } else {
      cfg.lambdas.push_back(int_list(l, "lambda"));
    }
    for (const auto& lam : cfg.lambdas) {
      if (lam.size() != n) throw ConfigError("lambda: expected " + std::to_string(n) + " labels");
    }
  }
  if (kv.contains("qhat")) {
    if (!kv["qhat"].is_string() || kv["qhat"].get<std::string>() != "one-parameter") {
      throw ConfigError("qhat: only one-parameter is supported");
    }
  }
  if (kv.contains("max_length")) cfg.max_length = positive(kv["max_length"], "max_length");
  if (kv.contains("max_height")) cfg.max_height = positive(kv["max_height"], "max_height");
  if (kv.contains("bound")) cfg.bound = positive(kv["bound"], "bound");
  if (kv.contains("depth")) cfg.depth = positive(kv["depth"], "depth");
  if (kv.contains("samples")) cfg.samples = positive(kv["samples"], "samples");
  if (kv.contains("seed")) {
    if (!kv["seed"].is_number_unsigned()) throw ConfigError("seed: expected a nonnegative integer");
    cfg.seed = kv["seed"].get<std::uint64_t>();
  }
  if (kv.contains("cross_check")) {
    if (!kv["cross_check"].is_boolean()) throw ConfigError("cross_check: expected true or false");
    cfg.cross_check = kv["cross_check"].get<bool>();
  }
  if (kv.contains("format")) {
    const json& f = kv["format"];
    if (!f.is_string() || (f.get<std::string>() != "json" && f.get<std::string>() != "table")) {
      throw ConfigError("format: expected json or table");
    }
    cfg.format = f.get<std::string>();
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  return parse_config(in);
}

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::undecided:
      return "undecided";
  }
  return "?";
}

void Report::append(Report other) {
  records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                 std::make_move_iterator(other.records.end()));
}

bool Report::passed() const {
  return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.status == Status::pass; });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [s](const Record& r) { return r.status == s; }));
}

void Report::write_json(std::ostream& os, bool timings) const {
  for (const auto& r : records) {
    os << "{\"check\":" << json_escape(r.check) << ",\"inputs\":" << json_escape(r.inputs)
       << ",\"status\":" << json_escape(status_name(r.status)) << ",\"detail\":" << json_escape(r.detail);
    if (timings) os << ",\"seconds\":" << std::fixed << std::setprecision(6) << r.seconds;
    os << "}\n";
  }
}

void Report::write_table(std::ostream& os, bool timings) const {
  std::size_t wc = 5, wi = 6;
  for (const auto& r : records) {
    wc = std::max(wc, r.check.size());
    wi = std::max(wi, r.inputs.size());
  }
  auto row = [&](const std::string& c, const std::string& i, const std::string& s, const std::string& d,
                 const std::string& t) {
    os << std::left << std::setw(static_cast<int>(wc)) << c << "  " << std::setw(static_cast<int>(wi)) << i << "  "
       << std::setw(9) << s << "  ";
    if (timings) os << std::setw(10) << t << "  ";
    os << d << "\n";
  };
  row("check", "inputs", "status", "detail", "seconds");
  for (const auto& r : records) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << r.seconds;
    row(r.check, r.inputs, status_name(r.status), r.detail, t.str());
  }
  os << count(Status::pass) << " pass, " << count(Status::fail) << " fail, " << count(Status::undecided)
     << " undecided\n";
}

}  // namespace qqsa::suites
