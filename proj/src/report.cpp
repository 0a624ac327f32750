#include "polens/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "polens/analytics.hpp"

namespace polens {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string to_string(MeasureKind measure) {
  return measure == MeasureKind::GaussianApprox ? "gaussian" : "sphere";
}

MeasureKind measure_from_string(const std::string& s) {
  if (s == "gaussian") return MeasureKind::GaussianApprox;
  if (s == "sphere") return MeasureKind::SphereUniform;
  throw std::invalid_argument("unknown measure: " + s);
}

std::string to_string(PolarizationKind kind) {
  switch (kind) {
    case PolarizationKind::Unbiased: return "unbiased";
    case PolarizationKind::Separable: return "separable";
    case PolarizationKind::MaxEntangled: return "maxent";
    case PolarizationKind::FixedState: return "fixed";
  }
  throw std::logic_error("to_string: unknown polarization kind");
}

PolarizationKind polarization_kind_from_string(const std::string& s) {
  if (s == "unbiased") return PolarizationKind::Unbiased;
  if (s == "separable") return PolarizationKind::Separable;
  if (s == "maxent") return PolarizationKind::MaxEntangled;
  if (s == "fixed") return PolarizationKind::FixedState;
  throw std::invalid_argument("unknown polarization kind: " + s);
}

void CsvTable::comment(const std::string& key, const std::string& value) {
  comments_.emplace_back(key, value);
}

void CsvTable::header(std::vector<std::string> names) {
  header_ = std::move(names);
}

void CsvTable::row(std::vector<std::string> cells) {
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  std::ostringstream out;
  for (const auto& [key, value] : comments_) out << "# " << key << "=" << value << "\n";
  for (std::size_t k = 0; k < header_.size(); ++k)
    out << (k ? "," : "") << header_[k];
  out << "\n";
  for (const auto& cells : rows_) {
    for (std::size_t k = 0; k < cells.size(); ++k)
      out << (k ? "," : "") << cells[k];
    out << "\n";
  }
  return out.str();
}

Json pure_state_to_json(const PureState& state) {
  Json amps = Json::array();
  for (Eigen::Index k = 0; k < state.amplitudes().size(); ++k) {
    const Complex& c = state.amplitudes()[k];
    amps.push_back(Json::array({c.real(), c.imag()}));
  }
  return Json{{"n_a", state.dims().n_a},
              {"n_b", state.dims().n_b},
              {"amplitudes", std::move(amps)}};
}

PureState pure_state_from_json(const Json& j) {
  try {
    if (!j.is_object())
      throw std::invalid_argument("state JSON: expected an object");
    for (const auto& [key, value] : j.items()) {
      (void)value;
      if (key != "n_a" && key != "n_b" && key != "amplitudes")
        throw std::invalid_argument("state JSON: unknown key: " + key);
    }
    const Bipartition dims(j.at("n_a").get<int>(), j.at("n_b").get<int>());
    const auto& amps = j.at("amplitudes");
    if (!amps.is_array() ||
        static_cast<Eigen::Index>(amps.size()) != dims.total())
      throw std::invalid_argument(
          "state JSON: amplitude count must equal n_a * n_b");
    Vector v(dims.total());
    for (std::size_t k = 0; k < amps.size(); ++k) {
      const auto& pair = amps[k];
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument(
            "state JSON: amplitudes must be [re, im] pairs");
      v[static_cast<Eigen::Index>(k)] =
          Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    return PureState(dims, std::move(v));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("state JSON: ") + e.what());
  }
}

Json experiment_config_to_json(const ExperimentConfig& config) {
  Json j{{"n_a", config.dims.n_a},
         {"n_b", config.dims.n_b},
         {"polarization", to_string(config.polarization.kind)},
         {"epsilon", config.polarization.epsilon},
         {"eps4_grid", config.eps4_grid},
         {"trials", config.trials},
         {"seed", config.master_seed},
         {"measure", to_string(config.measure)},
         {"normalize", config.normalize},
         {"randomize_local", config.polarization.randomize_local}};
  if (config.polarization.fixed_state)
    j["fixed_state"] = pure_state_to_json(*config.polarization.fixed_state);
  return j;
}

ExperimentConfig experiment_config_from_json(const Json& j) {
  try {
    if (!j.is_object())
      throw std::invalid_argument("config JSON: expected an object");
    ExperimentConfig config;
    int n_a = config.dims.n_a, n_b = config.dims.n_b;
    for (const auto& [key, value] : j.items()) {
      if (key == "n_a") n_a = value.get<int>();
      else if (key == "n_b") n_b = value.get<int>();
      else if (key == "polarization")
        config.polarization.kind =
            polarization_kind_from_string(value.get<std::string>());
      else if (key == "epsilon")
        config.polarization.epsilon = value.get<double>();
      else if (key == "eps4_grid")
        config.eps4_grid = value.get<std::vector<double>>();
      else if (key == "trials") config.trials = value.get<long long>();
      else if (key == "seed") config.master_seed = value.get<std::uint64_t>();
      else if (key == "measure")
        config.measure = measure_from_string(value.get<std::string>());
      else if (key == "normalize") config.normalize = value.get<bool>();
      else if (key == "randomize_local")
        config.polarization.randomize_local = value.get<bool>();
      else if (key == "fixed_state")
        config.polarization.fixed_state = pure_state_from_json(value);
      else
        throw std::invalid_argument("config JSON: unknown key: " + key);
    }
    config.dims = Bipartition(n_a, n_b);
    config.validate();
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config JSON: ") + e.what());
  }
}

namespace {

void config_comments(CsvTable& table, const ExperimentConfig& config) {
  table.comment("n_a", std::to_string(config.dims.n_a));
  table.comment("n_b", std::to_string(config.dims.n_b));
  table.comment("measure", to_string(config.measure));
  table.comment("polarization", to_string(config.polarization.kind));
  table.comment("randomize_local",
                config.polarization.randomize_local ? "true" : "false");
  table.comment("normalize", config.normalize ? "true" : "false");
  table.comment("trials", std::to_string(config.trials));
  table.comment("seed", std::to_string(config.master_seed));
}

}  // namespace

std::string experiment_csv(const RunResult& result) {
  CsvTable table;
  config_comments(table, result.config);
  table.header({"eps4", "sample_mean", "sample_std", "standard_error",
                "analytic_mean", "z_score"});
  for (const GridPointResult& r : result.rows)
    table.row({format_double(r.eps4), format_double(r.sample_mean),
               format_double(r.sample_std), format_double(r.standard_error),
               format_double(r.analytic_mean), format_double(r.z_score)});
  return table.str();
}

Json experiment_json(const RunResult& result) {
  Json rows = Json::array();
  for (const GridPointResult& r : result.rows)
    rows.push_back(Json{{"eps4", r.eps4},
                        {"sample_mean", r.sample_mean},
                        {"sample_std", r.sample_std},
                        {"standard_error", r.standard_error},
                        {"analytic_mean", r.analytic_mean},
                        {"z_score", r.z_score}});
  return Json{{"config", experiment_config_to_json(result.config)},
              {"rows", std::move(rows)}};
}

namespace {

Json run_meta_json(const Bipartition& dims, long long trials,
                   std::uint64_t seed, MeasureKind measure) {
  return Json{{"n_a", dims.n_a},
              {"n_b", dims.n_b},
              {"measure", to_string(measure)},
              {"trials", trials},
              {"seed", seed}};
}

void run_meta_comments(CsvTable& table, const Bipartition& dims,
                       long long trials, std::uint64_t seed,
                       MeasureKind measure) {
  table.comment("n_a", std::to_string(dims.n_a));
  table.comment("n_b", std::to_string(dims.n_b));
  table.comment("measure", to_string(measure));
  table.comment("trials", std::to_string(trials));
  table.comment("seed", std::to_string(seed));
}

}  // namespace

std::string moments_csv(const Bipartition& dims, long long trials,
                        std::uint64_t seed, MeasureKind measure,
                        const std::vector<MomentEstimate>& estimates) {
  CsvTable table;
  run_meta_comments(table, dims, trials, seed, measure);
  table.header({"name", "estimate", "standard_error", "n", "analytic",
                "z_score"});
  for (const MomentEstimate& e : estimates)
    table.row({e.name, format_double(e.value),
               format_double(e.standard_error), std::to_string(e.n),
               format_double(e.analytic),
               format_double(z_score(e.value, e.analytic, e.standard_error))});
  return table.str();
}

Json moments_json(const Bipartition& dims, long long trials,
                  std::uint64_t seed, MeasureKind measure,
                  const std::vector<MomentEstimate>& estimates) {
  Json rows = Json::array();
  for (const MomentEstimate& e : estimates)
    rows.push_back(Json{{"name", e.name},
                        {"estimate", e.value},
                        {"standard_error", e.standard_error},
                        {"n", e.n},
                        {"analytic", e.analytic},
                        {"z_score", z_score(e.value, e.analytic,
                                            e.standard_error)}});
  return Json{{"config", run_meta_json(dims, trials, seed, measure)},
              {"rows", std::move(rows)}};
}

std::string fourth_moment_csv(const Bipartition& dims, long long trials,
                              std::uint64_t seed, MeasureKind measure,
                              const FourthMomentEstimate& estimate) {
  CsvTable table;
  run_meta_comments(table, dims, trials, seed, measure);
  table.header({"class", "estimate", "standard_error", "n", "analytic",
                "z_score"});
  table.row({"delta_ij", format_double(estimate.coeff_delta_ij),
             format_double(estimate.stderr_delta_ij),
             std::to_string(estimate.n), format_double(estimate.analytic),
             format_double(z_score(estimate.coeff_delta_ij, estimate.analytic,
                                   estimate.stderr_delta_ij))});
  table.row({"delta_munu", format_double(estimate.coeff_delta_munu),
             format_double(estimate.stderr_delta_munu),
             std::to_string(estimate.n), format_double(estimate.analytic),
             format_double(z_score(estimate.coeff_delta_munu,
                                   estimate.analytic,
                                   estimate.stderr_delta_munu))});
  return table.str();
}

Json fourth_moment_json(const Bipartition& dims, long long trials,
                        std::uint64_t seed, MeasureKind measure,
                        const FourthMomentEstimate& estimate) {
  Json rows = Json::array();
  rows.push_back(Json{{"class", "delta_ij"},
                      {"estimate", estimate.coeff_delta_ij},
                      {"standard_error", estimate.stderr_delta_ij},
                      {"n", estimate.n},
                      {"analytic", estimate.analytic},
                      {"z_score",
                       z_score(estimate.coeff_delta_ij, estimate.analytic,
                               estimate.stderr_delta_ij)}});
  rows.push_back(Json{{"class", "delta_munu"},
                      {"estimate", estimate.coeff_delta_munu},
                      {"standard_error", estimate.stderr_delta_munu},
                      {"n", estimate.n},
                      {"analytic", estimate.analytic},
                      {"z_score",
                       z_score(estimate.coeff_delta_munu, estimate.analytic,
                               estimate.stderr_delta_munu)}});
  return Json{{"config", run_meta_json(dims, trials, seed, measure)},
              {"rows", std::move(rows)}};
}

std::string tail_csv(const ExperimentConfig& config,
                     const std::vector<TailRow>& rows) {
  CsvTable table;
  config_comments(table, config);
  table.comment("epsilon", format_double(config.polarization.epsilon));
  table.header({"alpha", "norm_tail", "norm_bound", "purity_tail",
                "purity_bound"});
  for (const TailRow& r : rows)
    table.row({format_double(r.alpha), format_double(r.norm_tail),
               format_double(r.norm_bound), format_double(r.purity_tail),
               format_double(r.purity_bound)});
  return table.str();
}

Json tail_json(const ExperimentConfig& config,
               const std::vector<TailRow>& rows) {
  Json out_rows = Json::array();
  for (const TailRow& r : rows)
    out_rows.push_back(Json{{"alpha", r.alpha},
                            {"norm_tail", r.norm_tail},
                            {"norm_bound", r.norm_bound},
                            {"purity_tail", r.purity_tail},
                            {"purity_bound", r.purity_bound}});
  return Json{{"config", experiment_config_to_json(config)},
              {"rows", std::move(out_rows)}};
}

std::string threshold_csv(const Bipartition& dims, long long trials,
                          std::uint64_t seed,
                          const ThresholdScanResult& scan) {
  const ThresholdResult analytic = eta_star(dims);
  CsvTable table;
  run_meta_comments(table, dims, trials, seed, MeasureKind::SphereUniform);
  table.comment("polarization", "separable");
  table.comment("crossed", scan.crossed ? "true" : "false");
  table.comment("crossing_eta", format_double(scan.crossing_eta));
  table.comment("eta_star", format_double(analytic.eta_star));
  table.comment("eta_star_squared", format_double(analytic.eta_star_squared));
  table.comment("saturated", analytic.saturated ? "true" : "false");
  table.comment("eta_star_asymptotic", format_double(eta_star_asymptotic()));
  table.header({"eta", "mean_purity", "inv_mean_purity", "analytic_d_eff"});
  for (const ThresholdRow& r : scan.rows)
    table.row({format_double(r.eta), format_double(r.mean_purity),
               format_double(r.inv_mean_purity),
               format_double(r.analytic_d_eff)});
  return table.str();
}

Json threshold_json(const Bipartition& dims, long long trials,
                    std::uint64_t seed, const ThresholdScanResult& scan) {
  const ThresholdResult analytic = eta_star(dims);
  Json rows = Json::array();
  for (const ThresholdRow& r : scan.rows)
    rows.push_back(Json{{"eta", r.eta},
                        {"mean_purity", r.mean_purity},
                        {"inv_mean_purity", r.inv_mean_purity},
                        {"analytic_d_eff", r.analytic_d_eff}});
  Json meta = run_meta_json(dims, trials, seed, MeasureKind::SphereUniform);
  meta["polarization"] = "separable";
  const Json crossing_eta = std::isnan(scan.crossing_eta)
                                ? Json(nullptr)
                                : Json(scan.crossing_eta);
  return Json{{"config", std::move(meta)},
              {"crossing",
               Json{{"crossed", scan.crossed},
                    {"crossing_eta", crossing_eta},
                    {"eta_star", analytic.eta_star},
                    {"eta_star_squared", analytic.eta_star_squared},
                    {"saturated", analytic.saturated},
                    {"eta_star_asymptotic", eta_star_asymptotic()}}},
              {"rows", std::move(rows)}};
}

}  // namespace polens
