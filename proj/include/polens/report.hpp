#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "polens/montecarlo.hpp"
#include "polens/types.hpp"

namespace polens {

using Json = nlohmann::ordered_json;

/// Round-trip exact decimal rendering (17 significant digits), shared by all
/// CSV output so reruns are byte-identical.
std::string format_double(double x);

std::string to_string(MeasureKind measure);
MeasureKind measure_from_string(const std::string& s);
std::string to_string(PolarizationKind kind);
PolarizationKind polarization_kind_from_string(const std::string& s);

/// CSV document: "# key=value" comment lines carrying the resolved
/// configuration, then a header row, then data rows.
class CsvTable {
 public:
  void comment(const std::string& key, const std::string& value);
  void header(std::vector<std::string> names);
  void row(std::vector<std::string> cells);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> comments_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Wire format {"n_a", "n_b", "amplitudes": [[re, im], ...]}; amplitude count
/// must equal n_a * n_b and no other keys are accepted.
Json pure_state_to_json(const PureState& state);
PureState pure_state_from_json(const Json& j);

/// Config wire format. Accepted keys: n_a, n_b, polarization, epsilon,
/// eps4_grid, trials, seed, measure, normalize, randomize_local, fixed_state.
/// Unknown keys are rejected; absent keys keep their defaults. A FixedState
/// reference travels inline under "fixed_state".
Json experiment_config_to_json(const ExperimentConfig& config);
ExperimentConfig experiment_config_from_json(const Json& j);

std::string experiment_csv(const RunResult& result);
Json experiment_json(const RunResult& result);

std::string moments_csv(const Bipartition& dims, long long trials,
                        std::uint64_t seed, MeasureKind measure,
                        const std::vector<MomentEstimate>& estimates);
Json moments_json(const Bipartition& dims, long long trials,
                  std::uint64_t seed, MeasureKind measure,
                  const std::vector<MomentEstimate>& estimates);

std::string fourth_moment_csv(const Bipartition& dims, long long trials,
                              std::uint64_t seed, MeasureKind measure,
                              const FourthMomentEstimate& estimate);
Json fourth_moment_json(const Bipartition& dims, long long trials,
                        std::uint64_t seed, MeasureKind measure,
                        const FourthMomentEstimate& estimate);

std::string tail_csv(const ExperimentConfig& config,
                     const std::vector<TailRow>& rows);
Json tail_json(const ExperimentConfig& config,
               const std::vector<TailRow>& rows);

std::string threshold_csv(const Bipartition& dims, long long trials,
                          std::uint64_t seed,
                          const ThresholdScanResult& scan);
Json threshold_json(const Bipartition& dims, long long trials,
                    std::uint64_t seed, const ThresholdScanResult& scan);

}  // namespace polens
