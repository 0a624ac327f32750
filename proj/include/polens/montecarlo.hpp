#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polens/sampling.hpp"
#include "polens/types.hpp"

namespace polens {

/// Declarative description of a purity experiment. Worker count is a runtime
/// argument, not part of the configuration: results are a pure function of
/// this struct.
struct ExperimentConfig {
  Bipartition dims{2, 2};
  PolarizationSpec polarization;  ///< epsilon is overridden per grid point
  std::vector<double> eps4_grid;  ///< ascending values of eps^4 in [0, 1]
  long long trials = 10000;
  std::uint64_t master_seed = 0;
  MeasureKind measure = MeasureKind::GaussianApprox;
  bool normalize = false;  ///< renormalize each draw before measuring

  void validate() const;
};

/// Mean reduced purity the configured ensemble is expected to produce at
/// polarization eps. With normalize = true this is still the unnormalized
/// ensemble law, kept as the reference value.
double analytic_mean_purity(const ExperimentConfig& config, double eps);

/// (mean - analytic) / standard_error with a deterministic zero-spread rule:
/// 0 when the difference also vanishes, signed infinity otherwise.
double z_score(double mean, double analytic, double standard_error);

struct GridPointResult {
  double eps4;
  double sample_mean;
  double sample_std;
  double standard_error;
  double analytic_mean;
  double z_score;  ///< (sample_mean - analytic_mean) / standard_error
};

struct RunResult {
  ExperimentConfig config;
  std::vector<GridPointResult> rows;
};

/// Sweeps eps4_grid, drawing config.trials states per point. Trial t of grid
/// point g uses stream id g * trials + t, so output is independent of the
/// worker count.
RunResult run_purity_experiment(const ExperimentConfig& config,
                                int threads = 1);

struct MomentEstimate {
  std::string name;
  double value;
  double standard_error;
  long long n;
  double analytic;
};

/// Estimates the five reduced-trace moments of the purity decomposition
/// against a fixed |0>|0> reference, one random component draw per trial.
std::vector<MomentEstimate> estimate_moments(const Bipartition& dims,
                                             long long trials,
                                             std::uint64_t master_seed,
                                             MeasureKind measure,
                                             int threads = 1);

struct FourthMomentEstimate {
  double coeff_delta_ij;    ///< from pairs with i = j, mu != nu
  double stderr_delta_ij;
  double coeff_delta_munu;  ///< from pairs with i != j, mu = nu
  double stderr_delta_munu;
  double analytic;          ///< shared coefficient of both delta terms
  long long n;
};

/// Estimates both Kronecker-delta coefficients of the quartic amplitude
/// moment from raw draws. Requires n_a >= 2 and n_b >= 2 so both index
/// classes are populated.
FourthMomentEstimate fourth_moment_oracle(const Bipartition& dims,
                                          long long trials,
                                          std::uint64_t master_seed,
                                          MeasureKind measure,
                                          int threads = 1);

struct TailRow {
  double alpha;
  double norm_tail;     ///< empirical P(|norm^2 - 1| >= alpha)
  double norm_bound;
  double purity_tail;   ///< empirical P(|purity - analytic mean| >= alpha)
  double purity_bound;
};

/// Empirical tail frequencies of one ensemble (config.polarization.epsilon,
/// eps4_grid unused) against the concentration bounds.
std::vector<TailRow> tail_frequency(const ExperimentConfig& config,
                                    const std::vector<double>& alpha_grid,
                                    int threads = 1);

struct ThresholdRow {
  double eta;
  double mean_purity;
  double inv_mean_purity;  ///< Monte Carlo effective dimension of the mean
  double analytic_d_eff;
};

struct ThresholdScanResult {
  std::vector<ThresholdRow> rows;
  bool crossed;        ///< inv_mean_purity reached 2 within the grid
  double crossing_eta; ///< linear interpolation between bracketing points
  double analytic_eta_star;
};

/// Scans noise amplitudes of the noisy separable ensemble (sphere-uniform
/// noise, locally randomized product reference) for the point where the
/// effective dimension of the mean state reaches 2.
ThresholdScanResult threshold_scan(const Bipartition& dims,
                                   const std::vector<double>& eta_grid,
                                   long long trials,
                                   std::uint64_t master_seed,
                                   int threads = 1);

}  // namespace polens
