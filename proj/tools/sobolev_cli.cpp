// Command-line front end: approximate, verify-identity, poincare, mollify-demo.
// Exit codes: 0 success, 1 numerical failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sobolev/approximator.hpp"
#include "sobolev/bernstein.hpp"
#include "sobolev/errors.hpp"
#include "sobolev/json_io.hpp"
#include "sobolev/mollifier.hpp"
#include "sobolev/poincare.hpp"
#include "sobolev/sigma_partition.hpp"

namespace {

using namespace sobolev;

constexpr int kMaxDimension = 3;
constexpr int kMaxOrder = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string subcommand;
  int dimension = 1;
  int order = 1;
  std::vector<int> degrees{8};
  int grid = 0;  // 0: default for the dimension
  std::string fn;
  std::string out;
  std::string poly_out;
  std::string format = "csv";
  std::uint64_t seed = 1;
  std::string config;

  std::string statement = "order-one";
  std::string p = "inf";
  int t = 0;
  int cases = 100;

  std::vector<int> steps{4, 8, 16};
  int target_order = -1;
  int kernel_smoothness = -1;
  int quad_nodes = 24;

  GridSpec grid_spec() const {
    return grid > 0 ? GridSpec{dimension, grid} : GridSpec::default_for(dimension);
  }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string single_line(std::string s) {
  for (auto& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

void check_caps(const RunConfig& cfg) {
  if (cfg.dimension < 1 || cfg.dimension > kMaxDimension) {
    throw UsageError("--n must be in [1, " + std::to_string(kMaxDimension) + "]");
  }
  if (cfg.order < 1 || cfg.order > kMaxOrder) throw UsageError("--m must be in [1, " + std::to_string(kMaxOrder) + "]");
  if (cfg.grid != 0 && cfg.grid < 2) throw UsageError("--grid needs at least 2 nodes per axis");
  if (cfg.format != "csv" && cfg.format != "json") throw UsageError("--format must be csv or json");
}

OraclePtr builtin_or_usage(const std::string& name, int dimension) {
  try {
    return make_builtin_oracle(name, dimension);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + cfg.out);
  f << text;
}

// --- subcommands -----------------------------------------------------------

int run_approximate(const RunConfig& cfg) {
  check_caps(cfg);
  if (cfg.fn.empty()) throw UsageError("approximate needs --fn");
  const auto u = builtin_or_usage(cfg.fn, cfg.dimension);
  const int cap = max_bernstein_degree(cfg.dimension);
  for (int d : cfg.degrees) {
    if (d < 1 || d > cap) throw UsageError("degree " + std::to_string(d) + " outside [1, " + std::to_string(cap) + "]");
  }

  std::ostringstream csv;
  csv << "degree,alpha,sup_error,max_sigma_bern_error\n";
  nlohmann::json runs = nlohmann::json::array();
  Polynomial last(cfg.dimension);

  for (int d : cfg.degrees) {
    ApproxConfig ac{cfg.order, cfg.dimension, d, cfg.grid_spec()};
    const auto result = approximate(*u, ac);
    const double bern = result.report.max_bernstein_error();
    for (const auto& e : result.report.errors) {
      csv << d << ',' << e.alpha.to_string(';') << ',' << num(e.sup_error) << ',' << num(bern) << '\n';
    }
    runs.push_back({{"degree", d},
                    {"max_error", result.report.max_error()},
                    {"max_sigma_bern_error", bern},
                    {"report", error_report_to_json(result.report)}});
    last = result.polynomial;
  }

  if (!cfg.poly_out.empty()) {
    std::ofstream f(cfg.poly_out, std::ios::binary);
    if (!f) throw UsageError("cannot open " + cfg.poly_out);
    f << polynomial_to_json(last).dump(2) << '\n';
  }

  if (cfg.format == "json") {
    nlohmann::json doc{{"function", cfg.fn}, {"dimension", cfg.dimension}, {"order", cfg.order}, {"runs", runs}};
    emit(cfg, doc.dump(2) + "\n");
  } else {
    emit(cfg, csv.str());
  }
  return 0;
}

int run_verify_identity(const RunConfig& cfg) {
  check_caps(cfg);
  const double residual = verify_identity(cfg.order, cfg.dimension);
  const auto terms = enumerate_sigma(cfg.order, cfg.dimension).size();
  const bool ok = residual <= 1e-12;
  if (cfg.format == "json") {
    nlohmann::json doc{{"m", cfg.order}, {"n", cfg.dimension}, {"terms", terms}, {"residual", residual}, {"ok", ok}};
    emit(cfg, doc.dump(2) + "\n");
  } else {
    emit(cfg, "m,n,terms,residual\n" + std::to_string(cfg.order) + "," + std::to_string(cfg.dimension) + "," +
                  std::to_string(terms) + "," + num(residual) + "\n");
  }
  if (!ok) {
    std::cerr << "error: numerical: identity residual " << num(residual) << " exceeds 1e-12\n";
    return 1;
  }
  return 0;
}

struct PoincareRow {
  int case_id;
  double lhs;
  double rhs;
  double ratio;
  bool holds;
};

int run_poincare(const RunConfig& cfg) {
  check_caps(cfg);
  NormKind p;
  try {
    p = parse_norm(cfg.p);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  if (cfg.cases < 1) throw UsageError("--cases must be positive");
  const auto grid = cfg.grid_spec();
  const int dim = cfg.dimension;
  const int count = cfg.fn.empty() ? cfg.cases : 1;
  const auto base = cfg.fn.empty() ? OraclePtr{} : builtin_or_usage(cfg.fn, dim);
  std::vector<PoincareRow> rows;
  ConstantTracker tracker;
  bool violated = false;

  // Per-case generators keep sweeps reproducible regardless of ordering.
  const auto random_base = [&](int i, int degree) -> OraclePtr {
    if (base) return base;
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(i));
    return std::make_shared<PolynomialOracle>(random_polynomial(dim, degree, rng));
  };

  if (cfg.statement == "order-one") {
    for (int i = 0; i < count; ++i) {
      OraclePtr u = base ? base : std::make_shared<WeightedOracle>(Polynomial::coordinate(dim, 0), random_base(i, 5));
      const auto r = check_order_one(*u, p, grid);
      violated = violated || !r.holds;
      rows.push_back({i, r.lhs, r.rhs, r.rhs > 0 ? r.lhs / r.rhs : 0.0, r.holds});
    }
  } else if (cfg.statement == "detailed") {
    const auto terms = enumerate_sigma(cfg.order, dim);
    const auto starts = all_of_order(dim, cfg.t);
    std::vector<std::pair<SigmaTerm, MultiIndex>> valid;
    for (const auto& t : terms) {
      for (const auto& a : starts) {
        if (chain_admissible(t, a)) valid.emplace_back(t, a);
      }
    }
    if (valid.empty()) throw UsageError("--t must satisfy 0 <= t <= N*m");
    for (int i = 0; i < count; ++i) {
      std::mt19937_64 pick(cfg.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
      const auto& [term, alpha] = valid[pick() % valid.size()];
      const auto u = std::make_shared<WeightedOracle>(weight_polynomial(term), random_base(i, 3));
      const auto r = check_detailed(*u, chain_for_weight(term, alpha), p, grid, tracker);
      const bool ok = !r.degenerate && std::isfinite(r.ratio);
      rows.push_back({i, r.lhs, r.rhs, r.ratio, ok});
    }
  } else if (cfg.statement == "standard") {
    Polynomial bubble = Polynomial::constant(dim, 1.0);
    for (int j = 0; j < dim; ++j) {
      const auto x = Polynomial::coordinate(dim, j);
      bubble = mul(bubble, subtract(x, mul(x, x)));
    }
    Polynomial weight = Polynomial::constant(dim, 1.0);
    for (int k = 0; k < cfg.order; ++k) weight = mul(weight, bubble);
    for (int i = 0; i < count; ++i) {
      const auto u = std::make_shared<WeightedOracle>(weight, random_base(i, 3));
      const auto r = check_standard(*u, cfg.order, p, grid);
      rows.push_back({i, r.lhs, r.rhs, r.ratio, !r.degenerate && std::isfinite(r.ratio)});
    }
  } else {
    throw UsageError("--statement must be order-one, detailed or standard");
  }

  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      arr.push_back({{"case_id", r.case_id}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ratio", r.ratio}, {"holds", r.holds}});
    }
    nlohmann::json doc{{"statement", cfg.statement}, {"p", cfg.p}, {"n", dim}, {"cases", arr}};
    emit(cfg, doc.dump(2) + "\n");
  } else {
    std::ostringstream csv;
    csv << "case_id,lhs,rhs,ratio,holds\n";
    for (const auto& r : rows) {
      csv << r.case_id << ',' << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.ratio) << ','
          << (r.holds ? "true" : "false") << '\n';
    }
    emit(cfg, csv.str());
  }
  if (violated) {
    std::cerr << "error: numerical: order-one Poincare inequality violated beyond tolerance\n";
    return 1;
  }
  return 0;
}

int run_mollify(const RunConfig& cfg) {
  check_caps(cfg);
  const std::string name = cfg.fn.empty() ? "kink-c1" : cfg.fn;
  const auto u = builtin_or_usage(name, cfg.dimension);
  const int target = cfg.target_order < 0 ? cfg.dimension * cfg.order : cfg.target_order;
  const auto grid = cfg.grid_spec();

  std::ostringstream csv;
  csv << "n,error\n";
  nlohmann::json arr = nlohmann::json::array();
  for (int n : cfg.steps) {
    auto mc = MollifierConfig::defaults(n, cfg.order, cfg.dimension);
    if (cfg.kernel_smoothness > 0) mc.kernel_smoothness = cfg.kernel_smoothness;
    mc.quadrature_nodes = cfg.quad_nodes;
    OraclePtr v;
    try {
      v = smooth(u, mc, target);
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
    const double err = sobolev_distance(*v, *u, cfg.order, grid);
    csv << n << ',' << num(err) << '\n';
    arr.push_back({{"n", n}, {"error", err}});
  }
  if (cfg.format == "json") {
    nlohmann::json doc{{"function", name}, {"dimension", cfg.dimension}, {"order", cfg.order},
                       {"target_order", target}, {"rows", arr}};
    emit(cfg, doc.dump(2) + "\n");
  } else {
    emit(cfg, csv.str());
  }
  return 0;
}

// --- option wiring -----------------------------------------------------------

void add_common(CLI::App* sc, RunConfig& cfg) {
  sc->add_option("--n", cfg.dimension, "Dimension N (<= 3)");
  sc->add_option("--m", cfg.order, "Derivative order m (<= 3)");
  sc->add_option("--grid", cfg.grid, "Report grid nodes per axis (default 101 for N<=2, 21 for N=3)");
  sc->add_option("--out", cfg.out, "Output file (default stdout)");
  sc->add_option("--format", cfg.format, "csv or json");
  sc->add_option("--seed", cfg.seed, "Random seed");
  sc->add_option("--config", cfg.config, "JSON file of option defaults; flags win");
}

// Fills options not given on the command line from the JSON config file.
void apply_config_file(CLI::App* sc, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config file " + path);
  nlohmann::json doc;
  try {
    f >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed config file: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    auto* opt = sc->get_option_no_throw("--" + key);
    if (!opt) throw UsageError("unknown config key '" + key + "'");
    if (opt->count() > 0 || key == "config") continue;
    std::vector<std::string> parts;
    const auto to_text = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (value.is_array()) {
      for (const auto& v : value) parts.push_back(to_text(v));
    } else {
      parts.push_back(to_text(value));
    }
    opt->add_result(parts);
    opt->run_callback();
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Simultaneous polynomial approximation of derivatives on the unit cube"};
  app.require_subcommand(1);

  auto* approx = app.add_subcommand("approximate", "Run the approximation pipeline for a built-in function");
  add_common(approx, cfg);
  approx->add_option("--fn", cfg.fn, "Built-in function name");
  approx->add_option("--degrees", cfg.degrees, "Bernstein degrees, comma separated")->delimiter(',');
  approx->add_option("--poly-out", cfg.poly_out, "Write the last polynomial as JSON");

  auto* ident = app.add_subcommand("verify-identity", "Check sum_sigma multiplicity * w_sigma = 1");
  add_common(ident, cfg);

  auto* poin = app.add_subcommand("poincare", "Poincare inequality checks and sweeps");
  add_common(poin, cfg);
  poin->add_option("--statement", cfg.statement, "order-one, detailed or standard");
  poin->add_option("--fn", cfg.fn, "Built-in function (omit for a random sweep)");
  poin->add_option("--p", cfg.p, "Norm: 1, 2 or inf");
  poin->add_option("--t", cfg.t, "Order of the chain start (detailed)");
  poin->add_option("--cases", cfg.cases, "Random cases");

  auto* moll = app.add_subcommand("mollify-demo", "Dilation + mollification convergence table");
  add_common(moll, cfg);
  moll->add_option("--fn", cfg.fn, "Built-in function (default kink-c1)");
  moll->add_option("--steps", cfg.steps, "Dilation steps n, comma separated")->delimiter(',');
  moll->add_option("--target-order", cfg.target_order, "Highest derivative order of the smoothed oracle");
  moll->add_option("--kernel-smoothness", cfg.kernel_smoothness, "Kernel exponent s (default mN-m+1)");
  moll->add_option("--quad-nodes", cfg.quad_nodes, "Gauss-Legendre nodes per ball coordinate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << single_line(e.what()) << '\n';
    return 2;
  }

  try {
    CLI::App* sc = app.get_subcommands().front();
    cfg.subcommand = sc->get_name();
    if (!cfg.config.empty()) apply_config_file(sc, cfg.config);
    if (cfg.subcommand == "approximate") return run_approximate(cfg);
    if (cfg.subcommand == "verify-identity") return run_verify_identity(cfg);
    if (cfg.subcommand == "poincare") return run_poincare(cfg);
    return run_mollify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: usage: " << single_line(e.what()) << '\n';
    return 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << single_line(e.what()) << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: usage: " << single_line(e.what()) << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: usage: " << single_line(e.what()) << '\n';
    return 2;
  } catch (const NumericalFailure& e) {
    std::cerr << "error: numerical: " << single_line(e.what()) << " (residual " << num(e.residual()) << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: numerical: " << single_line(e.what()) << '\n';
    return 1;
  }
}
