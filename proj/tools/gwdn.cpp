#include "gwdn/dnbuild.hpp"
#include "gwdn/errors.hpp"
#include "gwdn/frobenius.hpp"
#include "gwdn/gwring.hpp"
#include "gwdn/io.hpp"
#include "gwdn/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace {

using gwdn::PreconditionFailed;
using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kInternal = 3 };

struct JobConfig {
  std::string command;
  int n = 0;
  int pn = 0;
  std::string kind = "dn";
  int q_max = 6;
  bool q_max_given = false;
  int h_max = 1;
  bool h_max_given = false;
  std::string spec;
  bool geometric = false;
  bool symmetrize = false;
  bool logs = false;
  std::string format = "text";
  std::string symbol;
  std::string suite;
  int restrict_to = 0;
  int trials = 0;
  int symbols = 0;
  std::uint64_t seed = 1;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionFailed("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw gwdn::ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

/// Overlays the keys of a JSON job file onto cfg. Relative spec paths resolve against the file.
void apply_config_file(JobConfig& cfg, const std::string& path) {
  const json j = read_json_file(path);
  if (!j.is_object()) throw gwdn::ParseError("config file must hold a JSON object");
  static const std::set<std::string> known{"command", "n",       "pn",     "kind",   "q_max",
                                           "h_max",   "spec",    "geometric", "symmetrize",
                                           "logs",    "format",  "symbol", "suite",  "restrict",
                                           "trials",  "symbols", "seed"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw gwdn::ParseError("unknown config key '" + key + "'");
  try {
    auto get = [&](const char* key, auto& field) {
      if (j.contains(key)) j.at(key).get_to(field);
    };
    get("command", cfg.command);
    get("n", cfg.n);
    get("pn", cfg.pn);
    get("kind", cfg.kind);
    if (j.contains("q_max")) {
      j.at("q_max").get_to(cfg.q_max);
      cfg.q_max_given = true;
    }
    if (j.contains("h_max")) {
      j.at("h_max").get_to(cfg.h_max);
      cfg.h_max_given = true;
    }
    get("spec", cfg.spec);
    get("geometric", cfg.geometric);
    get("symmetrize", cfg.symmetrize);
    get("logs", cfg.logs);
    get("format", cfg.format);
    get("symbol", cfg.symbol);
    get("suite", cfg.suite);
    get("restrict", cfg.restrict_to);
    get("trials", cfg.trials);
    get("symbols", cfg.symbols);
    get("seed", cfg.seed);
  } catch (const json::exception& e) {
    throw gwdn::ParseError(std::string("bad value in config file: ") + e.what());
  }
  if (!cfg.spec.empty() && std::filesystem::path(cfg.spec).is_relative())
    cfg.spec = (std::filesystem::path(path).parent_path() / cfg.spec).string();
}

void validate(const JobConfig& cfg) {
  static const std::set<std::string> formats{"text", "json", "latex"};
  if (!formats.count(cfg.format)) throw PreconditionFailed("format must be text, json or latex");
  if (cfg.q_max < 1) throw PreconditionFailed("--qmax must be >= 1");
  if (cfg.h_max < 1) throw PreconditionFailed("--hmax must be >= 1");
  if (cfg.n < 0 || cfg.pn < 0 || cfg.restrict_to < 0) throw PreconditionFailed("N must be >= 1");
}

int dimension(const JobConfig& cfg) {
  const int n = cfg.pn > 0 ? cfg.pn : cfg.n;
  if (n < 1) throw PreconditionFailed("give --n N (N >= 1) or --pn N");
  return n;
}

std::optional<gwdn::Specialization> specialization(const JobConfig& cfg) {
  std::optional<gwdn::Specialization> s;
  if (cfg.pn > 0) s = gwdn::projective_space(cfg.pn);
  if (!cfg.spec.empty()) {
    auto file = gwdn::specialization_from_json(read_json_file(cfg.spec));
    if (!s) s.emplace();
    for (const auto& [v, r] : file.assignment) s->assignment[v] = r;
  }
  return s;
}

gwdn::QDOperator build_operator(const JobConfig& cfg, const std::string& kind) {
  const gwdn::DNConfig dn{dimension(cfg), !cfg.geometric, cfg.symmetrize};
  gwdn::QDOperator op;
  if (kind == "quantum")
    op = gwdn::quantum_operator(dn);
  else if (kind == "regularized")
    op = gwdn::regularize(gwdn::quantum_operator(dn));
  else if (kind == "dn")
    op = gwdn::dn_operator(dn);
  else
    throw PreconditionFailed("--kind must be quantum, regularized or dn");
  if (auto s = specialization(cfg)) op = gwdn::specialize(op, *s);
  return op;
}

std::string render(const gwdn::QDOperator& op, const std::string& format) {
  if (format == "json") return gwdn::to_json(op).dump(2) + "\n";
  if (format == "latex") return gwdn::latex(op) + "\n";
  return gwdn::format_operator(op) + "\n";
}

std::string render(const gwdn::PerturbedSeries& s, const std::string& format) {
  if (format == "json") return gwdn::to_json(s).dump(2) + "\n";
  if (format == "latex") return gwdn::latex(s);
  return gwdn::format_series(s);
}

int cmd_operator(const JobConfig& cfg) {
  const std::vector<std::string> kinds =
      cfg.kind == "all" ? std::vector<std::string>{"quantum", "regularized", "dn"}
                        : std::vector<std::string>{cfg.kind};
  if (kinds.size() == 1) {
    std::cout << render(build_operator(cfg, kinds[0]), cfg.format);
    return kOk;
  }
  if (cfg.format == "json") {
    json out = json::object();
    for (const auto& k : kinds) out[k] = gwdn::to_json(build_operator(cfg, k));
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  for (const auto& k : kinds) std::cout << k << ": " << render(build_operator(cfg, k), cfg.format);
  return kOk;
}

int cmd_solve(const JobConfig& cfg) {
  const auto op = build_operator(cfg, cfg.kind);
  int h_max = cfg.h_max;
  if (!cfg.h_max_given) h_max = std::max(1, op.slice(0).mult0());
  const auto series = gwdn::newton_solve(op, h_max, cfg.q_max);
  if (!cfg.logs) {
    std::cout << render(series, cfg.format);
    return kOk;
  }
  const auto logs = gwdn::log_solutions(series);
  if (cfg.format == "json")
    std::cout << gwdn::to_json(logs).dump(2) << "\n";
  else if (cfg.format == "latex")
    std::cout << gwdn::latex(logs);
  else
    std::cout << gwdn::format_log_solutions(logs);
  return kOk;
}

int cmd_reduce(const JobConfig& cfg) {
  if (cfg.symbol.empty()) throw PreconditionFailed("reduce needs a symbol, e.g. \"<H^1, H^2, H_1>\"");
  const auto symbol = gwdn::GWSymbol::parse(cfg.symbol);
  if (symbol.has_negative_entry())
    std::cerr << "note: " << symbol.str() << " has a negative entry and denotes 0\n";
  else if (gwdn::degree(symbol) < 0)
    std::cerr << "note: " << symbol.str() << " has negative degree and denotes 0\n";
  gwdn::ReduceCache cache;
  auto value = gwdn::reduce(symbol, cache);
  if (cfg.restrict_to > 0) value = gwdn::restrict_r_N(value, cfg.restrict_to, true);
  if (cfg.format == "json")
    std::cout << json{{"symbol", gwdn::to_json(symbol)}, {"value", value.str()}}.dump(2) << "\n";
  else if (cfg.format == "latex")
    std::cout << gwdn::canonicalize(symbol).latex() << " = " << gwdn::latex(value) << "\n";
  else
    std::cout << value.str() << "\n";
  return kOk;
}

int cmd_universal(const JobConfig& cfg) {
  gwdn::ReduceCache cache;
  const int h_max = cfg.h_max_given ? cfg.h_max : 3;
  auto [plain, regular] = gwdn::universal_I(cfg.q_max, h_max, cache);
  if (cfg.restrict_to > 0) {
    plain = gwdn::restrict_r_N(plain, cfg.restrict_to, true);
    regular = gwdn::restrict_r_N(regular, cfg.restrict_to, true);
  }
  if (cfg.format == "json") {
    std::cout << json{{"I", gwdn::to_json(plain)}, {"I_tilde", gwdn::to_json(regular)}}.dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "I:\n" << render(plain, cfg.format) << "I~:\n" << render(regular, cfg.format);
  return kOk;
}

int cmd_verify(const JobConfig& cfg) {
  if (cfg.suite.empty()) throw PreconditionFailed("verify needs a suite name");
  gwdn::SuiteOptions opts;
  opts.n = cfg.n;
  if (cfg.q_max_given) opts.q_max = cfg.q_max;
  opts.trials = cfg.trials;
  opts.symbols = cfg.symbols;
  opts.seed = cfg.seed;
  const auto report = gwdn::run_suite(cfg.suite, opts);
  if (cfg.format == "json") {
    json cases = json::array();
    for (const auto& c : report.cases)
      cases.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    std::cout << json{{"suite", report.suite}, {"ok", report.ok()}, {"cases", cases}}.dump(2)
              << "\n";
  } else {
    for (const auto& c : report.cases)
      std::cout << (c.ok ? "PASS " : "FAIL ") << report.suite << ": " << c.name
                << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    std::cout << report.suite << ": " << (report.ok() ? "PASS" : "FAIL") << "\n";
  }
  return report.ok() ? kOk : kVerifyFailed;
}

int dispatch(const JobConfig& cfg) {
  static const std::map<std::string, int (*)(const JobConfig&)> commands{
      {"operator", cmd_operator}, {"solve", cmd_solve},   {"reduce", cmd_reduce},
      {"universal", cmd_universal}, {"verify", cmd_verify}};
  auto it = commands.find(cfg.command);
  if (it == commands.end())
    throw PreconditionFailed(cfg.command.empty() ? "no command given"
                                                 : "unknown command '" + cfg.command + "'");
  return it->second(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum differential operators, their solutions and the minimal GW ring"};
  app.fallthrough();
  JobConfig given;
  std::string config_path;
  std::map<std::string, CLI::Option*> opt;
  app.add_option("--config", config_path, "JSON job file; command-line flags override it");
  opt["format"] = app.add_option("--format", given.format, "text, json or latex");
  opt["n"] = app.add_option("--n", given.n, "matrix size N + 1 (N >= 1)");
  opt["pn"] = app.add_option("--pn", given.pn, "projective space preset for N");
  opt["kind"] = app.add_option("--kind", given.kind, "quantum, regularized, dn (operator: also all)");
  opt["spec"] = app.add_option("--spec", given.spec, "specialization JSON file");
  opt["geometric"] = app.add_flag("--geometric", given.geometric, "set a_0_0 = 0");
  opt["symmetrize"] = app.add_flag("--symmetrize", given.symmetrize, "impose a_ij = a_{N-j,N-i}");
  opt["q_max"] = app.add_option("--qmax", given.q_max, "highest q power (default 6)");
  opt["h_max"] = app.add_option("--hmax", given.h_max, "number of h orders (solve: mult_0 P_0, universal: 3)");
  opt["logs"] = app.add_flag("--logs", given.logs, "solve: print the log-assembled solutions S_k");
  opt["restrict"] = app.add_option("--restrict", given.restrict_to, "apply r_N to the result");
  opt["trials"] = app.add_option("--trials", given.trials, "verify: randomized trials");
  opt["symbols"] = app.add_option("--symbols", given.symbols, "verify confluence: symbol count");
  opt["seed"] = app.add_option("--seed", given.seed, "verify: random seed");
  app.require_subcommand(0, 1);
  app.add_subcommand("operator", "print L^Q_N, its regularization or L_N");
  app.add_subcommand("solve", "Newton solution of an operator");
  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a GW symbol to a polynomial in a_i_j");
  opt["symbol"] = reduce_cmd->add_option("symbol", given.symbol, "e.g. \"<t1 H^2, H^1, H_0>\"");
  app.add_subcommand("universal", "universal I-series and its regularization");
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  opt["suite"] = verify_cmd->add_option("suite", given.suite, "paths, restriction, universality, appendix, flatness, confluence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    JobConfig cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (!app.get_subcommands().empty()) cfg.command = app.get_subcommands().front()->get_name();
    auto take = [&](const char* key, auto& dst, const auto& src) {
      if (opt.at(key)->count() > 0) dst = src;
    };
    take("format", cfg.format, given.format);
    take("n", cfg.n, given.n);
    take("pn", cfg.pn, given.pn);
    take("kind", cfg.kind, given.kind);
    take("spec", cfg.spec, given.spec);
    take("geometric", cfg.geometric, given.geometric);
    take("symmetrize", cfg.symmetrize, given.symmetrize);
    take("q_max", cfg.q_max, given.q_max);
    take("q_max", cfg.q_max_given, true);
    take("h_max", cfg.h_max, given.h_max);
    take("h_max", cfg.h_max_given, true);
    take("logs", cfg.logs, given.logs);
    take("restrict", cfg.restrict_to, given.restrict_to);
    take("trials", cfg.trials, given.trials);
    take("symbols", cfg.symbols, given.symbols);
    take("seed", cfg.seed, given.seed);
    take("symbol", cfg.symbol, given.symbol);
    take("suite", cfg.suite, given.suite);
    validate(cfg);
    return dispatch(cfg);
  } catch (const gwdn::MeasureNotDecreasing& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const gwdn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
