#include "polens/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "polens/analytics.hpp"
#include "polens/linalg.hpp"

namespace polens {

namespace {

// Runs body(t) once for every trial, partitioned into contiguous blocks.
// Workers only write to disjoint per-trial slots, so results do not depend
// on the worker count; reductions happen afterwards in index order.
template <class Body>
void for_each_trial(long long trials, int threads, Body&& body) {
  if (threads < 1)
    throw std::invalid_argument("worker count must be >= 1");
  if (threads == 1 || trials < 2) {
    for (long long t = 0; t < trials; ++t) body(t);
    return;
  }
  const long long workers = std::min<long long>(threads, trials);
  const long long chunk = (trials + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (long long w = 0; w < workers; ++w) {
    const long long lo = w * chunk;
    const long long hi = std::min(trials, lo + chunk);
    pool.emplace_back([&, lo, hi] {
      try {
        for (long long t = lo; t < hi; ++t) body(t);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct SampleStats {
  double mean;
  double stddev;
  double standard_error;
};

SampleStats reduce(const std::vector<double>& xs) {
  const auto n = static_cast<long long>(xs.size());
  double sum = 0.0;
  for (const double x : xs) sum += x;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (const double x : xs) {
    const double d = x - mean;
    ss += d * d;
  }
  const double var = n > 1 ? ss / static_cast<double>(n - 1) : 0.0;
  const double sd = std::sqrt(var);
  return {mean, sd, sd / std::sqrt(static_cast<double>(n))};
}

double reference_purity(const ExperimentConfig& config) {
  switch (config.polarization.kind) {
    case PolarizationKind::Unbiased:
      // The reference is itself a draw from the measure.
      return config.measure == MeasureKind::GaussianApprox
                 ? pi_unbiased(config.dims)
                 : pi_unbiased_exact(config.dims);
    case PolarizationKind::Separable:
      return 1.0;
    case PolarizationKind::MaxEntangled:
      return 1.0 / config.dims.n_a;
    case PolarizationKind::FixedState:
      if (!config.polarization.fixed_state)
        throw std::invalid_argument(
            "analytic_mean_purity: FixedState requires a reference state");
      return purity(partial_trace_b(*config.polarization.fixed_state));
  }
  throw std::logic_error("reference_purity: unknown kind");
}

}  // namespace

double z_score(double mean, double analytic, double standard_error) {
  const double diff = mean - analytic;
  if (standard_error == 0.0) {
    if (diff == 0.0) return 0.0;
    return std::copysign(std::numeric_limits<double>::infinity(), diff);
  }
  return diff / standard_error;
}

void ExperimentConfig::validate() const {
  if (trials < 1)
    throw std::domain_error("ExperimentConfig: trials must be >= 1");
  polarization.validate(dims);
  double prev = -1.0;
  for (const double e4 : eps4_grid) {
    if (!(e4 >= 0.0 && e4 <= 1.0))
      throw std::domain_error("ExperimentConfig: eps4 values must lie in [0, 1]");
    if (e4 <= prev)
      throw std::invalid_argument(
          "ExperimentConfig: eps4 grid must be strictly ascending");
    prev = e4;
  }
}

double analytic_mean_purity(const ExperimentConfig& config, double eps) {
  return mean_purity(eps, reference_purity(config), config.dims,
                     config.measure);
}

RunResult run_purity_experiment(const ExperimentConfig& config, int threads) {
  config.validate();
  if (config.eps4_grid.empty())
    throw std::invalid_argument("run_purity_experiment: empty eps4 grid");

  RunResult out;
  out.config = config;
  out.rows.reserve(config.eps4_grid.size());

  std::vector<double> purities(config.trials);
  for (std::size_t g = 0; g < config.eps4_grid.size(); ++g) {
    const double eps4 = config.eps4_grid[g];
    PolarizationSpec spec = config.polarization;
    spec.epsilon = std::pow(eps4, 0.25);
    for_each_trial(config.trials, threads, [&](long long t) {
      const RngStream stream(
          config.master_seed,
          static_cast<std::uint64_t>(g) * config.trials + t);
      PureState psi =
          polarized_sample(spec, config.dims, config.measure, stream);
      if (config.normalize) psi = normalized(psi);
      purities[t] = purity(partial_trace_b(psi));
    });
    const SampleStats stats = reduce(purities);
    const double analytic = analytic_mean_purity(config, spec.epsilon);
    out.rows.push_back({eps4, stats.mean, stats.stddev, stats.standard_error,
                        analytic,
                        z_score(stats.mean, analytic, stats.standard_error)});
  }
  return out;
}

std::vector<MomentEstimate> estimate_moments(const Bipartition& dims,
                                             long long trials,
                                             std::uint64_t master_seed,
                                             MeasureKind measure,
                                             int threads) {
  if (trials < 2)
    throw std::domain_error("estimate_moments: trials must be >= 2");

  Vector xi = Vector::Zero(dims.n_a);
  Vector chi = Vector::Zero(dims.n_b);
  xi[0] = 1.0;
  chi[0] = 1.0;
  const PureState phi0 = separable_state(dims, xi, chi);
  const DensityMatrix sigma0 = partial_trace_b(phi0);

  std::vector<std::vector<double>> values(5,
                                          std::vector<double>(trials, 0.0));
  for_each_trial(trials, threads, [&](long long t) {
    const RngStream stream(master_seed, static_cast<std::uint64_t>(t));
    const PureState phi = measure == MeasureKind::GaussianApprox
                              ? gaussian_state(dims, stream)
                              : sphere_state(dims, stream);
    const DensityMatrix sigma = partial_trace_b(phi);
    const DensityMatrix s = cross_operator(phi0, phi);
    values[0][t] = purity(sigma);
    values[1][t] = trace_product(sigma0, sigma);
    values[2][t] = purity(s);
    values[3][t] = trace_product(sigma0, s);
    values[4][t] = trace_product(sigma, s);
  });

  const MomentIdentities expected = expected_moments(dims, measure);
  const double analytic[5] = {expected.tr_sigma_sq, expected.tr_sigma0_sigma,
                              expected.tr_s_sq, expected.tr_sigma0_s,
                              expected.tr_sigma_s};
  const char* names[5] = {"tr_sigma_sq", "tr_sigma0_sigma", "tr_s_sq",
                          "tr_sigma0_s", "tr_sigma_s"};

  std::vector<MomentEstimate> out;
  out.reserve(5);
  for (int k = 0; k < 5; ++k) {
    const SampleStats stats = reduce(values[k]);
    out.push_back(
        {names[k], stats.mean, stats.standard_error, trials, analytic[k]});
  }
  return out;
}

FourthMomentEstimate fourth_moment_oracle(const Bipartition& dims,
                                          long long trials,
                                          std::uint64_t master_seed,
                                          MeasureKind measure, int threads) {
  if (dims.n_a < 2 || dims.n_b < 2)
    throw std::domain_error(
        "fourth_moment_oracle: both factors need dimension >= 2");
  if (trials < 2)
    throw std::domain_error("fourth_moment_oracle: trials must be >= 2");

  const double pairs_ij =
      dims.n_a * (static_cast<double>(dims.n_b) * (dims.n_b - 1) / 2.0);
  const double pairs_munu =
      dims.n_b * (static_cast<double>(dims.n_a) * (dims.n_a - 1) / 2.0);

  std::vector<double> same_row(trials), same_col(trials);
  for_each_trial(trials, threads, [&](long long t) {
    const RngStream stream(master_seed, static_cast<std::uint64_t>(t));
    const PureState phi = measure == MeasureKind::GaussianApprox
                              ? gaussian_state(dims, stream)
                              : sphere_state(dims, stream);
    const auto m = phi.as_matrix();
    double acc_row = 0.0;
    for (int i = 0; i < dims.n_a; ++i)
      for (int mu = 0; mu < dims.n_b; ++mu)
        for (int nu = mu + 1; nu < dims.n_b; ++nu)
          acc_row += std::norm(m(i, mu)) * std::norm(m(i, nu));
    double acc_col = 0.0;
    for (int mu = 0; mu < dims.n_b; ++mu)
      for (int i = 0; i < dims.n_a; ++i)
        for (int j = i + 1; j < dims.n_a; ++j)
          acc_col += std::norm(m(i, mu)) * std::norm(m(j, mu));
    same_row[t] = acc_row / pairs_ij;
    same_col[t] = acc_col / pairs_munu;
  });

  const SampleStats row_stats = reduce(same_row);
  const SampleStats col_stats = reduce(same_col);
  return {row_stats.mean,
          row_stats.standard_error,
          col_stats.mean,
          col_stats.standard_error,
          fourth_moment_coefficient(dims, measure),
          trials};
}

std::vector<TailRow> tail_frequency(const ExperimentConfig& config,
                                    const std::vector<double>& alpha_grid,
                                    int threads) {
  config.validate();
  if (alpha_grid.empty())
    throw std::invalid_argument("tail_frequency: empty alpha grid");
  for (const double alpha : alpha_grid)
    if (!(alpha > 0.0))
      throw std::domain_error("tail_frequency: alpha must be > 0");

  const double eps = config.polarization.epsilon;
  const double mean_ref = analytic_mean_purity(config, eps);

  std::vector<double> norm_dev(config.trials), purity_dev(config.trials);
  for_each_trial(config.trials, threads, [&](long long t) {
    const RngStream stream(config.master_seed, static_cast<std::uint64_t>(t));
    PureState psi = polarized_sample(config.polarization, config.dims,
                                     config.measure, stream);
    if (config.normalize) psi = normalized(psi);
    norm_dev[t] = std::abs(psi.norm_squared() - 1.0);
    purity_dev[t] = std::abs(purity(partial_trace_b(psi)) - mean_ref);
  });

  std::vector<TailRow> rows;
  rows.reserve(alpha_grid.size());
  const double n = static_cast<double>(config.trials);
  for (const double alpha : alpha_grid) {
    long long over_norm = 0, over_purity = 0;
    for (long long t = 0; t < config.trials; ++t) {
      if (norm_dev[t] >= alpha) ++over_norm;
      if (purity_dev[t] >= alpha) ++over_purity;
    }
    rows.push_back({alpha, static_cast<double>(over_norm) / n,
                    norm_tail_bound(config.dims, alpha, eps),
                    static_cast<double>(over_purity) / n,
                    purity_tail_bound(config.dims, alpha, eps)});
  }
  return rows;
}

ThresholdScanResult threshold_scan(const Bipartition& dims,
                                   const std::vector<double>& eta_grid,
                                   long long trials,
                                   std::uint64_t master_seed, int threads) {
  if (eta_grid.empty())
    throw std::invalid_argument("threshold_scan: empty eta grid");
  double prev = -1.0;
  for (const double eta : eta_grid) {
    if (!(eta >= 0.0 && eta <= 1.0))
      throw std::domain_error("threshold_scan: eta must lie in [0, 1]");
    if (eta <= prev)
      throw std::invalid_argument(
          "threshold_scan: eta grid must be strictly ascending");
    prev = eta;
  }
  if (trials < 1)
    throw std::domain_error("threshold_scan: trials must be >= 1");

  ThresholdScanResult out;
  out.rows.reserve(eta_grid.size());
  out.analytic_eta_star = eta_star(dims).eta_star;

  std::vector<double> purities(trials);
  for (std::size_t g = 0; g < eta_grid.size(); ++g) {
    const double eta = eta_grid[g];
    for_each_trial(trials, threads, [&](long long t) {
      const RngStream stream(master_seed,
                             static_cast<std::uint64_t>(g) * trials + t);
      const PureState psi = noisy_separable_sample(eta, dims, stream);
      purities[t] = purity(partial_trace_b(psi));
    });
    const SampleStats stats = reduce(purities);
    out.rows.push_back({eta, stats.mean, 1.0 / stats.mean,
                        1.0 / mean_purity_separable(eta, dims)});
  }

  out.crossed = false;
  out.crossing_eta = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k < out.rows.size(); ++k) {
    if (out.rows[k].inv_mean_purity < 2.0) continue;
    out.crossed = true;
    if (k == 0) {
      out.crossing_eta = out.rows[0].eta;
    } else {
      const ThresholdRow& a = out.rows[k - 1];
      const ThresholdRow& b = out.rows[k];
      const double slope =
          (b.inv_mean_purity - a.inv_mean_purity) / (b.eta - a.eta);
      out.crossing_eta = a.eta + (2.0 - a.inv_mean_purity) / slope;
    }
    break;
  }
  return out;
}

}  // namespace polens
