// Command-line front end: score, opf, simulate, evaluate, calibrate.
//
// Exit codes: 0 success, 1 runtime or data error, 2 usage or parse error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tadda/distributions.hpp"
#include "tadda/errors.hpp"
#include "tadda/evaluation.hpp"
#include "tadda/opf.hpp"
#include "tadda/panel_io.hpp"
#include "tadda/report.hpp"
#include "tadda/run_config.hpp"
#include "tadda/scores.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
};

tadda::RunConfig load_config(const GlobalOptions& global) {
  tadda::RunConfig config = global.config_path ? tadda::load_run_config(*global.config_path) : tadda::RunConfig{};
  if (global.seed) config.seed = *global.seed;
  if (global.out_dir) config.out_dir = *global.out_dir;
  return config;
}

std::ofstream open_output(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  return out;
}

template <typename Writer>
void write_file(const fs::path& dir, const std::string& name, Writer&& writer) {
  auto out = open_output(dir, name);
  writer(out);
  if (!out) throw std::runtime_error("failed writing " + (dir / name).string());
}

// --- score ---------------------------------------------------------------

struct ScoreArgs {
  std::string spec;
  std::optional<double> eps;
  double y_hat = 0.0;
  double y = 0.0;
};

int run_score(const ScoreArgs& args) {
  const auto spec = tadda::parse_score_spec(args.spec, args.eps.value_or(tadda::kDefaultEpsilon));
  std::printf("%.6f\n", tadda::score(spec, args.y_hat, args.y));
  return 0;
}

// --- opf -----------------------------------------------------------------

struct OpfArgs {
  std::vector<double> skew_normal;
  std::vector<double> atoms;
  std::string score = "tadda1_l1";
  std::optional<double> eps;
};

int run_opf(const OpfArgs& args) {
  if (args.skew_normal.empty() == args.atoms.empty()) {
    throw std::invalid_argument("give exactly one of --skew-normal XI OMEGA ALPHA or --atoms A,B,...");
  }
  const auto spec = tadda::parse_score_spec(args.score, args.eps.value_or(tadda::kDefaultEpsilon));
  std::unique_ptr<tadda::PredictiveDistribution> dist;
  if (!args.skew_normal.empty()) {
    dist = std::make_unique<tadda::SkewNormal>(
        tadda::SkewNormalParams{args.skew_normal[0], args.skew_normal[1], args.skew_normal[2]});
  } else {
    dist = std::make_unique<tadda::DiscreteEmpirical>(args.atoms);
  }
  const auto result = tadda::optimal_point_forecast(*dist, spec);
  std::printf("%.6f %s\n", result.value, std::string(tadda::to_string(result.case_label)).c_str());
  return 0;
}

// --- simulate ------------------------------------------------------------

struct SimulateArgs {
  std::optional<double> xi;
  std::optional<double> omega;
  std::optional<double> alpha;
  std::optional<double> eps;
  std::optional<std::size_t> mc_samples;
};

int run_simulate(const GlobalOptions& global, const SimulateArgs& args) {
  auto config = load_config(global);
  if (args.xi) config.skew_normal.xi = *args.xi;
  if (args.omega) config.skew_normal.omega = *args.omega;
  if (args.alpha) config.skew_normal.alpha = *args.alpha;
  if (args.mc_samples) config.mc_samples = *args.mc_samples;
  const double eps = args.eps.value_or(config.evaluation.epsilon);
  tadda::validate(config.skew_normal);
  if (!(eps > 0.0)) throw std::invalid_argument("--eps must be positive");
  if (config.mc_samples == 0) throw std::invalid_argument("--mc-samples must be positive");

  const auto report = tadda::simulation_report(config.skew_normal, eps, config.mc_samples, config.seed);
  write_file(config.out_dir, "simulation_functionals.csv",
             [&](std::ostream& o) { tadda::write_simulation_functionals_csv(o, report); });
  write_file(config.out_dir, "simulation_scores.csv",
             [&](std::ostream& o) { tadda::write_simulation_scores_csv(o, report); });
  write_file(config.out_dir, "simulation.md", [&](std::ostream& o) { tadda::write_simulation_markdown(o, report); });
  tadda::write_simulation_markdown(std::cout, report);
  return 0;
}

// --- evaluate / calibrate ------------------------------------------------

struct PanelArgs {
  std::optional<std::string> panel;
  std::optional<std::string> window;
  std::vector<int> candidates;
  std::optional<std::string> objective;
};

tadda::Panel load_panel(const tadda::RunConfig& config, const PanelArgs& args) {
  if (args.panel) return tadda::read_panel(fs::path(*args.panel));
  if (config.panel) return tadda::read_panel(*config.panel);
  throw std::invalid_argument("no panel given: use --panel PATH or the config key \"panel\"");
}

void apply_window(tadda::RunConfig& config, const PanelArgs& args) {
  if (!args.window) return;
  if (*args.window == "calibrate") {
    config.evaluation.window.reset();
    return;
  }
  std::size_t used = 0;
  int w = 0;
  try {
    w = std::stoi(*args.window, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != args.window->size() || w < 1) {
    throw std::invalid_argument("--window must be a positive integer or 'calibrate'");
  }
  config.evaluation.window = w;
}

int run_evaluate(const GlobalOptions& global, const PanelArgs& args) {
  auto config = load_config(global);
  apply_window(config, args);
  if (!args.candidates.empty()) config.candidate_windows = args.candidates;
  tadda::validate(config.evaluation);
  const auto panel = load_panel(config, args);

  auto eval = config.evaluation;
  std::optional<tadda::CalibrationResult> calibration;
  const auto objective = tadda::ScoreSpec::tadda1_l1(eval.epsilon);
  if (!eval.window) {
    calibration = tadda::calibrate_window_scores(panel, eval, config.candidate_windows, objective);
    eval.window = calibration->best_window;
  }

  // The quantile summary needs both forecast types regardless of the table's functionals.
  std::vector<tadda::Functional> generated = eval.functionals;
  for (auto f : {tadda::Functional::Mean, tadda::Functional::OpfTadda1L1}) {
    if (std::find(generated.begin(), generated.end(), f) == generated.end()) generated.push_back(f);
  }
  const auto forecasts =
      tadda::generate_forecasts(panel, eval.test_period, eval.lead_times, *eval.window, eval.epsilon, generated);
  auto table = tadda::tabulate(forecasts, generated, eval.scores, eval.lead_times);
  table.window = *eval.window;
  table.functionals = eval.functionals;

  const auto summary = tadda::forecast_quantile_summary(forecasts.records, forecasts.targets, config.quantile_probs);
  const tadda::ZeroShares shares{
      tadda::zero_share(tadda::target_values(forecasts.targets)),
      tadda::zero_share(tadda::forecast_values(forecasts.records, tadda::Functional::OpfTadda1L1)),
      tadda::zero_share(tadda::forecast_values(forecasts.records, tadda::Functional::Mean)),
  };

  const auto& out = config.out_dir;
  write_file(out, "evaluation.csv", [&](std::ostream& o) { tadda::write_evaluation_csv(o, table); });
  write_file(out, "evaluation.md", [&](std::ostream& o) { tadda::write_evaluation_markdown(o, table, true); });
  write_file(out, "quantiles.csv", [&](std::ostream& o) { tadda::write_quantile_summary_csv(o, summary); });
  write_file(out, "quantiles.md", [&](std::ostream& o) { tadda::write_quantile_summary_markdown(o, summary); });
  write_file(out, "zero_shares.csv", [&](std::ostream& o) { tadda::write_zero_shares_csv(o, shares); });
  write_file(out, "forecasts.csv", [&](std::ostream& o) {
    o << "country_id,target_month,lead_time,functional,y_hat\n";
    for (const auto& r : forecasts.records) {
      o << r.country_id << ',' << r.target_month << ',' << r.lead_time << ',' << tadda::to_string(r.functional)
        << ',' << tadda::format_full(r.y_hat) << '\n';
    }
  });
  write_file(out, "targets.csv", [&](std::ostream& o) {
    o << "country_id,target_month,lead_time,log_change\n";
    for (const auto& t : forecasts.targets) {
      o << t.country_id << ',' << t.target_month << ',' << t.lead_time << ',' << tadda::format_full(t.value) << '\n';
    }
  });
  if (calibration) {
    write_file(out, "calibration.csv",
               [&](std::ostream& o) { tadda::write_calibration_csv(o, *calibration, objective); });
  }

  tadda::write_evaluation_markdown(std::cout, table, true);
  std::cout << '\n';
  tadda::write_quantile_summary_markdown(std::cout, summary);
  std::cout << "\nzero shares: true " << tadda::format_fixed(100.0 * shares.true_log_changes, 1) << "%, opf_tadda1_l1 "
            << tadda::format_fixed(100.0 * shares.opf_tadda, 1) << "%, mean "
            << tadda::format_fixed(100.0 * shares.mean, 1) << "%\n";
  return 0;
}

int run_calibrate(const GlobalOptions& global, const PanelArgs& args) {
  auto config = load_config(global);
  if (!args.candidates.empty()) config.candidate_windows = args.candidates;
  const auto objective = args.objective ? tadda::parse_score_spec(*args.objective, config.evaluation.epsilon)
                                        : tadda::ScoreSpec::tadda1_l1(config.evaluation.epsilon);
  tadda::functional_for(objective);
  tadda::validate(config.evaluation);
  const auto panel = load_panel(config, args);

  const auto result = tadda::calibrate_window_scores(panel, config.evaluation, config.candidate_windows, objective);
  write_file(config.out_dir, "calibration.csv",
             [&](std::ostream& o) { tadda::write_calibration_csv(o, result, objective); });
  for (const auto& [w, value] : result.objective_by_window) {
    std::cout << "w=" << w << ' ' << tadda::format_fixed(value, 6) << '\n';
  }
  std::cout << "best window: " << result.best_window << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scoring, optimal point forecasts and evaluation for TADDA-type scores"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--config", global.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", global.seed, "Seed for every stochastic step");
  app.add_option("--out", global.out_dir, "Output directory");

  ScoreArgs score_args;
  auto* score_cmd = app.add_subcommand("score", "Score one forecast against one outcome");
  score_cmd->add_option("spec", score_args.spec, "ae, se, tadda1_l1, tadda1_l2, tadda2_l1")->required();
  score_cmd->add_option("--eps", score_args.eps, "Tolerance for TADDA scores (default 0.048)");
  score_cmd->add_option("--yhat", score_args.y_hat, "Point forecast")->required();
  score_cmd->add_option("--y", score_args.y, "Realized outcome")->required();

  OpfArgs opf_args;
  auto* opf_cmd = app.add_subcommand("opf", "Optimal point forecast under a score");
  opf_cmd->add_option("--skew-normal", opf_args.skew_normal, "XI OMEGA ALPHA")->expected(3);
  opf_cmd->add_option("--atoms", opf_args.atoms, "Equal-weight atoms, comma separated")->delimiter(',');
  opf_cmd->add_option("--score", opf_args.score, "Score spec")->capture_default_str();
  opf_cmd->add_option("--eps", opf_args.eps, "Tolerance for TADDA scores (default 0.048)");

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "Expected scores of functionals under a skew normal");
  sim_cmd->add_option("--xi", sim_args.xi, "Location");
  sim_cmd->add_option("--omega", sim_args.omega, "Scale");
  sim_cmd->add_option("--alpha", sim_args.alpha, "Slant");
  sim_cmd->add_option("--eps", sim_args.eps, "TADDA tolerance");
  sim_cmd->add_option("--mc-samples", sim_args.mc_samples, "Monte Carlo draws");

  PanelArgs eval_args;
  auto* eval_cmd = app.add_subcommand("evaluate", "Rolling evaluation of the window forecaster on a panel");
  eval_cmd->add_option("--panel", eval_args.panel, "Country-month CSV");
  eval_cmd->add_option("--window", eval_args.window, "Window length or 'calibrate'");
  eval_cmd->add_option("--candidates", eval_args.candidates, "Candidate windows for calibration")->delimiter(',');

  PanelArgs cal_args;
  auto* cal_cmd = app.add_subcommand("calibrate", "Pick the window length on the calibration period");
  cal_cmd->add_option("--panel", cal_args.panel, "Country-month CSV");
  cal_cmd->add_option("--candidates", cal_args.candidates, "Candidate windows")->delimiter(',');
  cal_cmd->add_option("--objective", cal_args.objective, "Objective score (default tadda1_l1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*score_cmd) return run_score(score_args);
    if (*opf_cmd) return run_opf(opf_args);
    if (*sim_cmd) return run_simulate(global, sim_args);
    if (*eval_cmd) return run_evaluate(global, eval_args);
    if (*cal_cmd) return run_calibrate(global, cal_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tadda::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
