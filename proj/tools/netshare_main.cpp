// Experiment harness: exposes the pricing solvers and Monte-Carlo sweeps as
// subcommands emitting CSV (or a JSON mirror) for plotting.
//
// Exit codes: 0 success, 1 numeric failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netshare/complete_info.hpp"
#include "netshare/differentiated.hpp"
#include "netshare/poi.hpp"
#include "netshare/sweep.hpp"
#include "netshare/text_io.hpp"
#include "netshare/two_sided.hpp"
#include "netshare/uniform_pricing.hpp"
#include "netshare/valuation.hpp"

namespace {

using netshare::format_double;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model;
  double rho = std::numeric_limits<double>::quiet_NaN();
  double cost = 0.0;
  std::size_t n = 0;
  std::string theta_list;
  std::string mechanism = "all";
  std::string n_grid = "10,100,1000,10000";
  std::string rho_list = "0.9,0.99";
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  int figure_id = 0;
  std::size_t samples = 0;  // 0: per-n default
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string output;
  std::string format = "csv";
};

bool rho_given(const Options& opt) { return !std::isnan(opt.rho); }

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  std::string token;
  std::stringstream stream(text);
  while (std::getline(stream, token, ',')) {
    try {
      values.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw UsageError("cannot parse " + what + " entry '" + token + "'");
    }
  }
  if (values.empty()) throw UsageError(what + " must be a non-empty comma-separated list");
  return values;
}

std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> grid;
  for (double v : parse_double_list(text, "n-grid")) {
    if (v < 1 || v != std::floor(v)) throw UsageError("n-grid entries must be positive integers");
    grid.push_back(static_cast<std::size_t>(v));
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw UsageError("n-grid must be strictly increasing");
  }
  return grid;
}

netshare::NetworkValueFn make_model(const Options& opt) {
  if (opt.model.empty()) throw UsageError("--model is required");
  if (opt.model == "bounded") {
    if (!rho_given(opt)) throw UsageError("--rho is required for the bounded model");
    if (!(opt.rho > 0.0 && opt.rho < 1.0)) throw UsageError("--rho must lie in (0,1)");
    return netshare::NetworkValueFn::bounded(opt.rho);
  }
  if (rho_given(opt)) throw UsageError("--rho only applies to the bounded model");
  if (opt.model == "zipf") return netshare::NetworkValueFn::zipf();
  if (opt.model == "metcalfe") return netshare::NetworkValueFn::metcalfe();
  throw UsageError("unknown model '" + opt.model + "' (expected bounded|zipf|metcalfe)");
}

void check_format(const Options& opt) {
  if (opt.format != "csv" && opt.format != "json") {
    throw UsageError("--format must be csv or json");
  }
}

void emit(const netshare::Table& table, const Options& opt, const std::string& default_path = "") {
  std::string path = opt.output.empty() ? default_path : opt.output;
  netshare::write_output(path, opt.format == "json" ? table.to_json() : table.to_csv());
}

// --- subcommand handlers ----------------------------------------------------

int run_solve(const Options& opt) {
  check_format(opt);
  const netshare::NetworkValueFn fn = make_model(opt);
  const netshare::ValuationDistribution dist = netshare::ValuationDistribution::uniform();
  if (!(opt.cost >= 0.0)) throw UsageError("--cost must be >= 0");

  std::optional<netshare::ValuationProfile> profile;
  std::size_t n = opt.n;
  if (!opt.theta_list.empty()) {
    auto thetas = parse_double_list(opt.theta_list, "theta");
    if (opt.n != 0 && opt.n != thetas.size()) {
      throw UsageError("--n disagrees with the number of --theta entries");
    }
    n = thetas.size();
    try {
      profile = netshare::ValuationProfile::from_values(std::move(thetas), opt.seed);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (n == 0) throw UsageError("--n (or an explicit --theta list) is required");

  const bool want_all = opt.mechanism == "all";
  const bool want_complete = want_all || opt.mechanism == "complete";
  const bool want_uniform = want_all || opt.mechanism == "uniform";
  const bool want_diff = want_all || opt.mechanism == "differentiated";
  if (!want_complete && !want_uniform && !want_diff) {
    throw UsageError("unknown mechanism '" + opt.mechanism +
                     "' (expected complete|uniform|differentiated|all)");
  }

  netshare::Table table({"mechanism", "m_or_theta", "price", "profit", "std_error"});

  if (want_complete) {
    if (!profile) profile = netshare::sample_profile(dist, n, opt.seed);
    const auto solution = netshare::solve_complete(*profile, fn, opt.cost);
    std::string prices;
    for (std::size_t i = 0; i < solution.prices.size(); ++i) {
      if (i > 0) prices += ';';
      prices += format_double(solution.prices[i]);
    }
    table.add_row({"complete", static_cast<std::uint64_t>(solution.m_star), prices,
                   solution.profit, nullptr});
  }
  if (want_uniform) {
    const auto solution = netshare::solve_uniform(dist, fn, opt.cost, n);
    table.add_row({"uniform", solution.theta_bar, solution.price, solution.expected_profit,
                   nullptr});
  }
  if (want_diff) {
    const std::size_t replicates =
        opt.samples > 0 ? opt.samples : netshare::default_replicates(n);
    const auto estimate = netshare::expected_diff_profit(dist, fn, opt.cost, n, replicates,
                                                         opt.seed, opt.workers);
    table.add_row({"differentiated", nullptr, nullptr, estimate.mean, estimate.std_error});
  }
  emit(table, opt);
  return 0;
}

netshare::Table sweep_table() {
  return netshare::Table({"n", "model_params", "ratio_U_over_D", "ratio_se", "poi", "poi_se"});
}

void append_sweep_rows(netshare::Table& table, const std::vector<netshare::SweepRow>& rows) {
  for (const auto& row : rows) {
    table.add_row({static_cast<std::uint64_t>(row.n), row.model_params, row.ratio_u_over_d,
                   row.ratio_se, row.poi, row.poi_se});
  }
}

int run_figure(const Options& opt) {
  check_format(opt);
  if (opt.figure_id != 1 && opt.figure_id != 2) throw UsageError("--id must be 1 or 2");
  if (!(opt.cost >= 0.0)) throw UsageError("--cost must be >= 0");

  netshare::SweepConfig config;
  config.n_grid = parse_grid(opt.n_grid);
  config.cost = opt.cost;
  config.replicates = opt.samples;
  config.seed = opt.seed;
  config.workers = opt.workers;

  netshare::Table table = sweep_table();
  if (opt.figure_id == 1) {
    for (double rho : parse_double_list(opt.rho_list, "rho-list")) {
      if (!(rho > 0.0 && rho < 1.0)) throw UsageError("rho-list entries must lie in (0,1)");
      config.fn = netshare::NetworkValueFn::bounded(rho);
      append_sweep_rows(table, netshare::run_ratio_sweep(config));
    }
  } else {
    config.fn = netshare::NetworkValueFn::zipf();
    append_sweep_rows(table, netshare::run_ratio_sweep(config));
    config.fn = netshare::NetworkValueFn::metcalfe();
    append_sweep_rows(table, netshare::run_ratio_sweep(config));
  }
  const std::string default_path = "figure" + std::to_string(opt.figure_id) +
                                   (opt.format == "json" ? ".json" : ".csv");
  emit(table, opt, default_path);
  return 0;
}

int run_sweep(const Options& opt) {
  check_format(opt);
  if (!(opt.cost >= 0.0)) throw UsageError("--cost must be >= 0");
  netshare::SweepConfig config;
  config.fn = make_model(opt);
  config.n_grid = parse_grid(opt.n_grid);
  config.cost = opt.cost;
  config.replicates = opt.samples;
  config.seed = opt.seed;
  config.workers = opt.workers;
  netshare::Table table = sweep_table();
  append_sweep_rows(table, netshare::run_ratio_sweep(config));
  emit(table, opt);
  return 0;
}

int run_poi(const Options& opt) {
  check_format(opt);
  const netshare::NetworkValueFn fn = make_model(opt);
  if (!(opt.cost >= 0.0)) throw UsageError("--cost must be >= 0");
  if (opt.n == 0) throw UsageError("--n is required");
  const std::size_t replicates =
      opt.samples > 0 ? opt.samples : netshare::default_replicates(opt.n);
  const auto report =
      netshare::estimate_poi(netshare::ValuationDistribution::uniform(), fn, opt.cost, opt.n,
                             replicates, opt.seed, opt.workers);

  netshare::Table table({"model", "rho", "cost", "n", "replicates", "poi", "poi_se",
                         "complete_mean", "complete_se", "uniform_profit", "closed_form"});
  table.add_row({fn.name(), rho_given(opt) ? ordered_json(opt.rho) : ordered_json(nullptr),
                 opt.cost, static_cast<std::uint64_t>(opt.n),
                 static_cast<std::uint64_t>(replicates), report.poi_estimate,
                 report.complete_profit.std_error / report.uniform_profit,
                 report.complete_profit.mean, report.complete_profit.std_error,
                 report.uniform_profit,
                 report.closed_form ? ordered_json(*report.closed_form) : ordered_json(nullptr)});
  emit(table, opt);
  return 0;
}

int run_two_sided(const Options& opt) {
  check_format(opt);
  if (opt.n1 == 0 || opt.n2 == 0) throw UsageError("--n1 and --n2 must be >= 1");
  if (!(opt.cost >= 0.0)) throw UsageError("--cost must be >= 0");
  const std::size_t replicates = opt.samples > 0 ? opt.samples : 2000;

  netshare::TwoSidedInstance inst(opt.n1, opt.n2, opt.cost);
  const auto uniform = netshare::solve_two_sided_uniform(inst);
  const auto closed = netshare::two_sided_closed_form(opt.n1, opt.n2);
  const auto poi = netshare::two_sided_poi(inst, replicates, opt.seed, opt.workers);

  netshare::Table table({"n1", "n2", "cost", "theta1", "theta2", "P1", "P2", "profit",
                         "P1_closed", "P2_closed", "profit_closed", "poi_closed",
                         "poi_alternate", "poi_mc", "poi_mc_se", "replicates"});
  table.add_row({static_cast<std::uint64_t>(opt.n1), static_cast<std::uint64_t>(opt.n2), opt.cost,
                 uniform.theta1_bar, uniform.theta2_bar, uniform.p1, uniform.p2,
                 uniform.expected_profit, closed.p1, closed.p2, closed.profit,
                 poi.poi_closed_form, poi.poi_alternate, poi.poi_estimate,
                 poi.complete_profit.std_error / poi.uniform_profit,
                 static_cast<std::uint64_t>(replicates)});
  emit(table, opt);
  return 0;
}

// --- config file ------------------------------------------------------------

/// Loads the optional JSON config (flat object mirroring the long flag
/// names) into the option defaults. Command-line flags win because CLI11
/// only assigns bound variables for flags that actually appear.
void apply_config_file(const std::string& path, Options& opt) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);
  nlohmann::json config;
  try {
    in >> config;
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot parse config file: ") + e.what());
  }
  if (!config.is_object()) throw UsageError("config file must hold a JSON object");

  auto as_list_string = [](const nlohmann::json& value, const char* key) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ',';
        joined += item.is_string() ? item.get<std::string>() : item.dump();
      }
      return joined;
    }
    throw UsageError(std::string("config key '") + key + "' must be a string or array");
  };

  for (const auto& [key, value] : config.items()) {
    if (key == "model") opt.model = value.get<std::string>();
    else if (key == "rho") opt.rho = value.get<double>();
    else if (key == "cost") opt.cost = value.get<double>();
    else if (key == "n") opt.n = value.get<std::size_t>();
    else if (key == "theta") opt.theta_list = as_list_string(value, "theta");
    else if (key == "mechanism") opt.mechanism = value.get<std::string>();
    else if (key == "n-grid") opt.n_grid = as_list_string(value, "n-grid");
    else if (key == "rho-list") opt.rho_list = as_list_string(value, "rho-list");
    else if (key == "n1") opt.n1 = value.get<std::size_t>();
    else if (key == "n2") opt.n2 = value.get<std::size_t>();
    else if (key == "id") opt.figure_id = value.get<int>();
    else if (key == "samples") opt.samples = value.get<std::size_t>();
    else if (key == "seed") opt.seed = value.get<std::uint64_t>();
    else if (key == "workers") opt.workers = value.get<unsigned>();
    else if (key == "output") opt.output = value.get<std::string>();
    else if (key == "format") opt.format = value.get<std::string>();
    else throw UsageError("unknown config key '" + key + "'");
  }
}

std::string find_config_argument(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;

  try {
    const std::string config_path = find_config_argument(argc, argv);
    if (!config_path.empty()) apply_config_file(config_path, opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"pricing mechanisms for sharing platforms with network externalities"};
  app.require_subcommand(1);

  std::string config_sink;  // --config is consumed before CLI11 runs

  auto* solve = app.add_subcommand("solve", "solve one market instance");
  solve->add_option("--model", opt.model, "bounded|zipf|metcalfe");
  solve->add_option("--rho", opt.rho, "coverage-miss probability (bounded model)");
  solve->add_option("--cost", opt.cost, "per-user platform cost");
  solve->add_option("--n", opt.n, "number of potential users");
  solve->add_option("--theta", opt.theta_list, "explicit valuations, comma separated");
  solve->add_option("--mechanism", opt.mechanism, "complete|uniform|differentiated|all");

  auto* figure = app.add_subcommand("figure", "reproduce a profit-ratio/PoI figure");
  figure->add_option("--id", opt.figure_id, "1 (bounded) or 2 (zipf+metcalfe)");
  figure->add_option("--n-grid", opt.n_grid, "comma-separated n values");
  figure->add_option("--cost", opt.cost, "per-user platform cost");
  figure->add_option("--rho-list", opt.rho_list, "rho values for figure 1");

  auto* sweep = app.add_subcommand("sweep", "profit-ratio/PoI sweep over an n grid");
  sweep->add_option("--model", opt.model, "bounded|zipf|metcalfe");
  sweep->add_option("--rho", opt.rho, "coverage-miss probability (bounded model)");
  sweep->add_option("--cost", opt.cost, "per-user platform cost");
  sweep->add_option("--n-grid", opt.n_grid, "comma-separated n values");

  auto* poi = app.add_subcommand("poi", "price-of-information estimate");
  poi->add_option("--model", opt.model, "bounded|zipf|metcalfe");
  poi->add_option("--rho", opt.rho, "coverage-miss probability (bounded model)");
  poi->add_option("--cost", opt.cost, "per-user platform cost");
  poi->add_option("--n", opt.n, "number of potential users");

  auto* two_sided = app.add_subcommand("two-sided", "two-group market solvers");
  two_sided->add_option("--n1", opt.n1, "contributors");
  two_sided->add_option("--n2", opt.n2, "pure consumers");
  two_sided->add_option("--cost", opt.cost, "per-user platform cost");

  for (auto* cmd : {solve, figure, sweep, poi, two_sided}) {
    cmd->add_option("--samples", opt.samples, "Monte-Carlo replicates (0: size-based default)");
    cmd->add_option("--seed", opt.seed, "master seed");
    cmd->add_option("--workers", opt.workers, "worker threads (0: all hardware threads)");
    cmd->add_option("--output", opt.output, "output path (empty: stdout)");
    cmd->add_option("--format", opt.format, "csv or json");
    cmd->add_option("--config", config_sink, "JSON config mirroring the flags (flags win)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return run_solve(opt);
    if (figure->parsed()) return run_figure(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (poi->parsed()) return run_poi(opt);
    if (two_sided->parsed()) return run_two_sided(opt);
    std::cerr << "error: no subcommand given\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
