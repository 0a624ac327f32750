// Command-line front end: closed-form predictions, single draws, and the
// Monte Carlo experiments, with deterministic CSV/JSON output.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polens/analytics.hpp"
#include "polens/linalg.hpp"
#include "polens/montecarlo.hpp"
#include "polens/report.hpp"
#include "polens/sampling.hpp"

namespace {

using namespace polens;

// "a:b:step" inclusive grid, or a single value. The endpoint is snapped so
// grids like 0:1:0.1 end exactly at 1.
std::vector<double> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return {std::stod(text)};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw std::invalid_argument("grid must be <start>:<stop>:<step>");
  const double start = std::stod(text.substr(0, c1));
  const double stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(text.substr(c2 + 1));
  if (!(step > 0.0) || stop < start)
    throw std::invalid_argument("grid needs stop >= start and step > 0");
  const double snap = 1e-9 * std::max(1.0, std::abs(stop));
  std::vector<double> grid;
  for (long long k = 0;; ++k) {
    double v = start + static_cast<double>(k) * step;
    if (v > stop + snap) break;
    if (std::abs(v - stop) <= snap) v = stop;
    grid.push_back(v);
  }
  return grid;
}

PureState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::invalid_argument("state file " + path + ": " + e.what());
  }
  return pure_state_from_json(j);
}

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_file);
  out << text;
}

std::string render(const CsvTable& table, const Json& json, bool as_json) {
  return as_json ? json.dump(2) + "\n" : table.str();
}

// Polarization flag syntax: unbiased | separable | maxent | fixed:<path>,
// plus pi0=<value> where a bare reference purity is meaningful.
struct PolarizationChoice {
  PolarizationSpec spec;
  std::optional<double> bare_pi0;
};

PolarizationChoice parse_polarization(const std::string& text,
                                      bool allow_bare_pi0) {
  PolarizationChoice out;
  if (text.rfind("fixed:", 0) == 0) {
    out.spec.kind = PolarizationKind::FixedState;
    out.spec.fixed_state = load_state(text.substr(6));
  } else if (text.rfind("pi0=", 0) == 0) {
    if (!allow_bare_pi0)
      throw std::invalid_argument(
          "pi0=<value> is only valid for the predict subcommand");
    out.spec.kind = PolarizationKind::FixedState;  // placeholder kind
    out.bare_pi0 = std::stod(text.substr(4));
  } else {
    out.spec.kind = polarization_kind_from_string(text);
  }
  return out;
}

struct CommonFlags {
  int n_a = 2;
  int n_b = 2;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  long long trials = 10000;
  int threads = 1;
  std::string measure = "gaussian";
  std::string polarization = "unbiased";
  bool normalize = false;
  bool randomize_local = true;
  std::string output = "csv";
  std::string out_file;
  std::string emit_state;
  double epsilon = 0.0;
  double eps4 = 0.0;
};

void add_dims(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--dim-a", f.n_a, "Dimension of subsystem A")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--dim-b", f.n_b, "Dimension of subsystem B")
      ->check(CLI::PositiveNumber);
}

void add_output(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--output", f.output, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out-file", f.out_file,
                  "Write output here instead of stdout");
}

double resolve_epsilon(const CLI::Option* eps_opt, const CLI::Option* e4_opt,
                       const CommonFlags& f) {
  if (e4_opt->count()) {
    if (!(f.eps4 >= 0.0 && f.eps4 <= 1.0))
      throw std::domain_error("--eps4 must lie in [0, 1]");
    return std::pow(f.eps4, 0.25);
  }
  (void)eps_opt;
  return f.epsilon;
}

int cmd_predict(const CommonFlags& f, const CLI::Option* eps_opt,
                const CLI::Option* e4_opt) {
  const Bipartition dims(f.n_a, f.n_b);
  const MeasureKind measure = measure_from_string(f.measure);
  const double eps = resolve_epsilon(eps_opt, e4_opt, f);
  const PolarizationChoice choice = parse_polarization(f.polarization, true);

  double pi0 = 0.0;
  std::string kind_label;
  if (choice.bare_pi0) {
    pi0 = *choice.bare_pi0;
    if (!(pi0 >= 1.0 / dims.n_a && pi0 <= 1.0))
      throw std::domain_error("pi0 must lie in [1/N, 1]");
    kind_label = "pi0";
  } else {
    kind_label = to_string(choice.spec.kind);
    switch (choice.spec.kind) {
      case PolarizationKind::Unbiased:
        pi0 = measure == MeasureKind::GaussianApprox ? pi_unbiased(dims)
                                                     : pi_unbiased_exact(dims);
        break;
      case PolarizationKind::Separable:
        pi0 = 1.0;
        break;
      case PolarizationKind::MaxEntangled:
        if (dims.n_a > dims.n_b)
          throw std::domain_error("maxent requires dim-a <= dim-b");
        pi0 = 1.0 / dims.n_a;
        break;
      case PolarizationKind::FixedState:
        pi0 = purity(partial_trace_b(*choice.spec.fixed_state));
        break;
    }
  }

  const double mean = mean_purity(eps, pi0, dims, measure);
  const ThresholdResult threshold = eta_star(dims);

  CsvTable table;
  table.header({"n_a", "n_b", "measure", "polarization", "epsilon", "eps4",
                "pi0", "pi_unbiased", "pi_unbiased_exact", "mean_purity",
                "eta_star", "eta_star_squared", "saturated",
                "eta_star_asymptotic"});
  table.row({std::to_string(dims.n_a), std::to_string(dims.n_b), f.measure,
             kind_label, format_double(eps),
             format_double(eps * eps * eps * eps), format_double(pi0),
             format_double(pi_unbiased(dims)),
             format_double(pi_unbiased_exact(dims)), format_double(mean),
             format_double(threshold.eta_star),
             format_double(threshold.eta_star_squared),
             threshold.saturated ? "true" : "false",
             format_double(eta_star_asymptotic())});

  const Json json{{"n_a", dims.n_a},
                  {"n_b", dims.n_b},
                  {"measure", f.measure},
                  {"polarization", kind_label},
                  {"epsilon", eps},
                  {"eps4", eps * eps * eps * eps},
                  {"pi0", pi0},
                  {"pi_unbiased", pi_unbiased(dims)},
                  {"pi_unbiased_exact", pi_unbiased_exact(dims)},
                  {"mean_purity", mean},
                  {"eta_star", threshold.eta_star},
                  {"eta_star_squared", threshold.eta_star_squared},
                  {"saturated", threshold.saturated},
                  {"eta_star_asymptotic", eta_star_asymptotic()}};
  write_output(render(table, json, f.output == "json"), f.out_file);
  return 0;
}

void maybe_emit_state(const PureState& state, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open state file: " + path);
  out << pure_state_to_json(state).dump(2) << "\n";
}

int cmd_sample(const CommonFlags& f, const CLI::Option* eps_opt,
               const CLI::Option* e4_opt) {
  const Bipartition dims(f.n_a, f.n_b);
  const MeasureKind measure = measure_from_string(f.measure);
  PolarizationChoice choice = parse_polarization(f.polarization, false);
  choice.spec.epsilon = resolve_epsilon(eps_opt, e4_opt, f);
  choice.spec.randomize_local = f.randomize_local;

  PureState psi = polarized_sample(choice.spec, dims, measure,
                                   RngStream(f.seed, f.stream));
  if (f.normalize) psi = normalized(psi);
  maybe_emit_state(psi, f.emit_state);

  const DensityMatrix rho = partial_trace_b(psi);
  const double p = purity(rho);
  CsvTable table;
  table.header({"n_a", "n_b", "measure", "polarization", "epsilon", "eps4",
                "seed", "stream", "norm_squared", "purity",
                "effective_dimension"});
  const double eps = choice.spec.epsilon;
  table.row({std::to_string(dims.n_a), std::to_string(dims.n_b), f.measure,
             to_string(choice.spec.kind), format_double(eps),
             format_double(eps * eps * eps * eps), std::to_string(f.seed),
             std::to_string(f.stream), format_double(psi.norm_squared()),
             format_double(p), format_double(effective_dimension(rho))});

  const Json json{{"n_a", dims.n_a},
                  {"n_b", dims.n_b},
                  {"measure", f.measure},
                  {"polarization", to_string(choice.spec.kind)},
                  {"epsilon", eps},
                  {"eps4", eps * eps * eps * eps},
                  {"seed", f.seed},
                  {"stream", f.stream},
                  {"norm_squared", psi.norm_squared()},
                  {"purity", p},
                  {"effective_dimension", effective_dimension(rho)}};
  write_output(render(table, json, f.output == "json"), f.out_file);
  return 0;
}

int cmd_experiment(const CommonFlags& f, const std::string& config_path,
                   const std::string& eps4_grid_text,
                   const CLI::Option* eps_opt, const CLI::Option* e4_opt) {
  ExperimentConfig config;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in)
      throw std::invalid_argument("cannot open config file: " + config_path);
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw std::invalid_argument("config file " + config_path + ": " +
                                  e.what());
    }
    config = experiment_config_from_json(j);
  } else {
    config.dims = Bipartition(f.n_a, f.n_b);
    PolarizationChoice choice = parse_polarization(f.polarization, false);
    config.polarization = std::move(choice.spec);
    config.polarization.randomize_local = f.randomize_local;
    config.measure = measure_from_string(f.measure);
    config.trials = f.trials;
    config.master_seed = f.seed;
    config.normalize = f.normalize;
    if (!eps4_grid_text.empty()) {
      config.eps4_grid = parse_grid(eps4_grid_text);
    } else if (e4_opt->count() || eps_opt->count()) {
      const double eps = resolve_epsilon(eps_opt, e4_opt, f);
      config.eps4_grid = {eps * eps * eps * eps};
    } else {
      config.eps4_grid = parse_grid("0:1:0.1");
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  const RunResult result = run_purity_experiment(config, f.threads);
  const std::chrono::duration<double> dt =
      std::chrono::steady_clock::now() - t0;
  std::fprintf(stderr, "wall_seconds=%.3f\n", dt.count());

  const std::string text = f.output == "json"
                               ? experiment_json(result).dump(2) + "\n"
                               : experiment_csv(result);
  write_output(text, f.out_file);
  return 0;
}

int cmd_moments(const CommonFlags& f, bool fourth) {
  const Bipartition dims(f.n_a, f.n_b);
  const MeasureKind measure = measure_from_string(f.measure);

  const auto t0 = std::chrono::steady_clock::now();
  std::string csv;
  Json json;
  if (fourth) {
    const FourthMomentEstimate estimate =
        fourth_moment_oracle(dims, f.trials, f.seed, measure, f.threads);
    csv = fourth_moment_csv(dims, f.trials, f.seed, measure, estimate);
    json = fourth_moment_json(dims, f.trials, f.seed, measure, estimate);
  } else {
    const std::vector<MomentEstimate> estimates =
        estimate_moments(dims, f.trials, f.seed, measure, f.threads);
    csv = moments_csv(dims, f.trials, f.seed, measure, estimates);
    json = moments_json(dims, f.trials, f.seed, measure, estimates);
  }
  const std::chrono::duration<double> dt =
      std::chrono::steady_clock::now() - t0;
  std::fprintf(stderr, "wall_seconds=%.3f\n", dt.count());

  write_output(f.output == "json" ? json.dump(2) + "\n" : csv, f.out_file);
  return 0;
}

int cmd_threshold(const CommonFlags& f, const std::string& eta_grid_text,
                  const CLI::Option* eta_opt, double eta_value) {
  const Bipartition dims(f.n_a, f.n_b);
  std::vector<double> grid;
  if (!eta_grid_text.empty())
    grid = parse_grid(eta_grid_text);
  else if (eta_opt->count())
    grid = {eta_value};
  else
    grid = parse_grid("0:1:0.02");

  const auto t0 = std::chrono::steady_clock::now();
  const ThresholdScanResult scan =
      threshold_scan(dims, grid, f.trials, f.seed, f.threads);
  const std::chrono::duration<double> dt =
      std::chrono::steady_clock::now() - t0;
  std::fprintf(stderr, "wall_seconds=%.3f\n", dt.count());

  const std::string text =
      f.output == "json"
          ? threshold_json(dims, f.trials, f.seed, scan).dump(2) + "\n"
          : threshold_csv(dims, f.trials, f.seed, scan);
  write_output(text, f.out_file);
  return 0;
}

int cmd_concentration(const CommonFlags& f, std::vector<double> alphas,
                      const std::string& alpha_grid_text,
                      const CLI::Option* eps_opt, const CLI::Option* e4_opt) {
  ExperimentConfig config;
  config.dims = Bipartition(f.n_a, f.n_b);
  PolarizationChoice choice = parse_polarization(f.polarization, false);
  config.polarization = std::move(choice.spec);
  config.polarization.epsilon = resolve_epsilon(eps_opt, e4_opt, f);
  config.polarization.randomize_local = f.randomize_local;
  config.measure = measure_from_string(f.measure);
  config.trials = f.trials;
  config.master_seed = f.seed;
  config.normalize = f.normalize;

  if (!alpha_grid_text.empty()) {
    const std::vector<double> grid = parse_grid(alpha_grid_text);
    alphas.insert(alphas.end(), grid.begin(), grid.end());
  }
  if (alphas.empty()) alphas = {0.05, 0.1, 0.2, 0.5};

  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<TailRow> rows = tail_frequency(config, alphas, f.threads);
  const std::chrono::duration<double> dt =
      std::chrono::steady_clock::now() - t0;
  std::fprintf(stderr, "wall_seconds=%.3f\n", dt.count());

  const std::string text = f.output == "json"
                               ? tail_json(config, rows).dump(2) + "\n"
                               : tail_csv(config, rows);
  write_output(text, f.out_file);
  return 0;
}

int cmd_fixed_purity(const CommonFlags& f, double target,
                     const std::string& measure_name) {
  const Bipartition dims(f.n_a, f.n_b);
  const MeasureKind measure = measure_from_string(measure_name);
  const FixedPuritySample sample =
      fixed_purity_sample(target, dims, RngStream(f.seed, f.stream), measure);
  maybe_emit_state(sample.state, f.emit_state);

  const double p = purity(partial_trace_b(sample.state));
  const double eps4 = sample.epsilon * sample.epsilon * sample.epsilon *
                      sample.epsilon;
  CsvTable table;
  table.header({"n_a", "n_b", "measure", "target_purity", "kind", "epsilon",
                "eps4", "pi0", "seed", "stream", "sample_norm_squared",
                "sample_purity"});
  table.row({std::to_string(dims.n_a), std::to_string(dims.n_b),
             measure_name, format_double(target), to_string(sample.kind),
             format_double(sample.epsilon), format_double(eps4),
             format_double(sample.pi0), std::to_string(f.seed),
             std::to_string(f.stream),
             format_double(sample.state.norm_squared()), format_double(p)});

  const Json json{{"n_a", dims.n_a},
                  {"n_b", dims.n_b},
                  {"measure", measure_name},
                  {"target_purity", target},
                  {"kind", to_string(sample.kind)},
                  {"epsilon", sample.epsilon},
                  {"eps4", eps4},
                  {"pi0", sample.pi0},
                  {"seed", f.seed},
                  {"stream", f.stream},
                  {"sample_norm_squared", sample.state.norm_squared()},
                  {"sample_purity", p}};
  write_output(render(table, json, f.output == "json"), f.out_file);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polarized bipartite pure-state ensembles: predictions, "
               "sampling, and Monte Carlo verification"};
  app.require_subcommand(1);

  CommonFlags f;
  std::string config_path, eps4_grid_text, eta_grid_text, alpha_grid_text;
  std::vector<double> alphas;
  double eta_value = 0.0;
  double target_purity = 0.0;
  std::string fixed_measure = "sphere";
  bool fourth = false;

  auto* predict = app.add_subcommand("predict", "Closed-form quantities");
  add_dims(predict, f);
  auto* p_eps = predict->add_option("--epsilon", f.epsilon,
                                    "Polarization amplitude in [0, 1]");
  auto* p_e4 = predict->add_option("--eps4", f.eps4, "epsilon^4 in [0, 1]");
  p_eps->excludes(p_e4);
  predict->add_option("--polarization", f.polarization,
                      "unbiased|separable|maxent|pi0=<value>")
      ->capture_default_str();
  predict->add_option("--measure", f.measure, "gaussian|sphere")
      ->check(CLI::IsMember({"gaussian", "sphere"}))
      ->capture_default_str();
  add_output(predict, f);

  auto* sample = app.add_subcommand("sample", "Draw one state");
  add_dims(sample, f);
  auto* s_eps = sample->add_option("--epsilon", f.epsilon,
                                   "Polarization amplitude in [0, 1]");
  auto* s_e4 = sample->add_option("--eps4", f.eps4, "epsilon^4 in [0, 1]");
  s_eps->excludes(s_e4);
  sample->add_option("--polarization", f.polarization,
                     "unbiased|separable|maxent|fixed:<path>")
      ->capture_default_str();
  sample->add_option("--measure", f.measure, "gaussian|sphere")
      ->check(CLI::IsMember({"gaussian", "sphere"}))
      ->capture_default_str();
  sample->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  sample->add_option("--stream", f.stream, "Stream id")
      ->capture_default_str();
  sample->add_flag("--normalize", f.normalize,
                   "Renormalize the drawn state");
  sample->add_option("--randomize-local", f.randomize_local,
                     "Randomize local bases of the reference state")
      ->capture_default_str();
  sample->add_option("--emit-state", f.emit_state,
                     "Write the drawn state as JSON to this path");
  add_output(sample, f);

  auto* experiment =
      app.add_subcommand("experiment", "Purity sweep over an eps^4 grid");
  add_dims(experiment, f);
  auto* x_cfg = experiment->add_option("--config", config_path,
                                       "JSON config file (exclusive with "
                                       "the shape flags)");
  auto* x_grid = experiment->add_option("--eps4-grid", eps4_grid_text,
                                        "<start>:<stop>:<step> in eps^4");
  auto* x_eps = experiment->add_option("--epsilon", f.epsilon,
                                       "Single epsilon instead of a grid");
  auto* x_e4 = experiment->add_option("--eps4", f.eps4,
                                      "Single eps^4 instead of a grid");
  x_eps->excludes(x_e4);
  x_grid->excludes(x_eps)->excludes(x_e4);
  auto* x_pol = experiment->add_option("--polarization", f.polarization,
                                       "unbiased|separable|maxent|"
                                       "fixed:<path>")
                    ->capture_default_str();
  auto* x_meas = experiment->add_option("--measure", f.measure,
                                        "gaussian|sphere")
                     ->check(CLI::IsMember({"gaussian", "sphere"}))
                     ->capture_default_str();
  auto* x_trials = experiment->add_option("--trials", f.trials,
                                          "Draws per grid point")
                       ->check(CLI::PositiveNumber)
                       ->capture_default_str();
  auto* x_seed = experiment->add_option("--seed", f.seed, "Master seed")
                     ->capture_default_str();
  auto* x_norm = experiment->add_flag("--normalize", f.normalize,
                                      "Renormalize each draw");
  auto* x_rand = experiment->add_option("--randomize-local",
                                        f.randomize_local,
                                        "Randomize local reference bases")
                     ->capture_default_str();
  for (CLI::Option* opt :
       {x_grid, x_eps, x_e4, x_pol, x_meas, x_trials, x_seed, x_norm, x_rand})
    x_cfg->excludes(opt);
  experiment->add_option("--threads", f.threads, "Worker count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output(experiment, f);

  auto* moments = app.add_subcommand(
      "moments", "Reduced-trace moment estimates vs closed forms");
  add_dims(moments, f);
  moments->add_option("--trials", f.trials, "Number of draws")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  moments->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  moments->add_option("--measure", f.measure, "gaussian|sphere")
      ->check(CLI::IsMember({"gaussian", "sphere"}))
      ->capture_default_str();
  moments->add_flag("--fourth", fourth,
                    "Estimate the quartic amplitude coefficients instead");
  moments->add_option("--threads", f.threads, "Worker count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output(moments, f);

  auto* threshold = app.add_subcommand(
      "threshold", "Noise scan for effective dimension 2");
  add_dims(threshold, f);
  auto* t_grid = threshold->add_option("--eta-grid", eta_grid_text,
                                       "<start>:<stop>:<step> in eta");
  auto* t_eta = threshold->add_option("--eta", eta_value,
                                      "Single noise amplitude");
  t_grid->excludes(t_eta);
  threshold->add_option("--trials", f.trials, "Draws per grid point")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  threshold->add_option("--seed", f.seed, "Master seed")
      ->capture_default_str();
  threshold->add_option("--threads", f.threads, "Worker count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output(threshold, f);

  auto* concentration = app.add_subcommand(
      "concentration", "Empirical tails against the concentration bounds");
  add_dims(concentration, f);
  auto* c_eps = concentration->add_option("--epsilon", f.epsilon,
                                          "Polarization amplitude")
                    ->capture_default_str();
  auto* c_e4 = concentration->add_option("--eps4", f.eps4, "epsilon^4");
  c_eps->excludes(c_e4);
  concentration->add_option("--polarization", f.polarization,
                            "unbiased|separable|maxent|fixed:<path>")
      ->capture_default_str();
  concentration->add_option("--measure", f.measure, "gaussian|sphere")
      ->check(CLI::IsMember({"gaussian", "sphere"}))
      ->capture_default_str();
  concentration->add_option("--alpha", alphas,
                            "Deviation threshold (repeatable)");
  concentration->add_option("--alpha-grid", alpha_grid_text,
                            "<start>:<stop>:<step> in alpha");
  concentration->add_option("--trials", f.trials, "Number of draws")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  concentration->add_option("--seed", f.seed, "Master seed")
      ->capture_default_str();
  concentration->add_flag("--normalize", f.normalize,
                          "Renormalize each draw");
  concentration->add_option("--randomize-local", f.randomize_local,
                            "Randomize local reference bases")
      ->capture_default_str();
  concentration->add_option("--threads", f.threads, "Worker count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output(concentration, f);

  auto* fixed = app.add_subcommand(
      "fixed-purity", "Draw from the ensemble tuned to a target mean purity");
  add_dims(fixed, f);
  fixed->add_option("--target-purity", target_purity,
                    "Desired ensemble-mean purity in [1/N, 1]")
      ->required();
  fixed->add_option("--measure", fixed_measure, "gaussian|sphere")
      ->check(CLI::IsMember({"gaussian", "sphere"}))
      ->capture_default_str();
  fixed->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  fixed->add_option("--stream", f.stream, "Stream id")
      ->capture_default_str();
  fixed->add_option("--emit-state", f.emit_state,
                    "Write the drawn state as JSON to this path");
  add_output(fixed, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (predict->parsed()) return cmd_predict(f, p_eps, p_e4);
    if (sample->parsed()) return cmd_sample(f, s_eps, s_e4);
    if (experiment->parsed())
      return cmd_experiment(f, config_path, eps4_grid_text, x_eps, x_e4);
    if (moments->parsed()) return cmd_moments(f, fourth);
    if (threshold->parsed())
      return cmd_threshold(f, eta_grid_text, t_eta, eta_value);
    if (concentration->parsed())
      return cmd_concentration(f, alphas, alpha_grid_text, c_eps, c_e4);
    if (fixed->parsed())
      return cmd_fixed_purity(f, target_purity, fixed_measure);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
