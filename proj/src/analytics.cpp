#include "polens/analytics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polens {

namespace {

void check_eps(double eps, const char* who) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw std::domain_error(std::string(who) + ": eps must lie in [0, 1]");
}

}  // namespace

double pi_unbiased(const Bipartition& dims) {
  const double n = dims.n_a, m = dims.n_b;
  return (m + n) / (m * n);
}

double pi_unbiased_exact(const Bipartition& dims) {
  const double n = dims.n_a, m = dims.n_b;
  return (m + n) / (m * n + 1.0);
}

double mean_purity(double eps, double pi0, const Bipartition& dims) {
  check_eps(eps, "mean_purity");
  const double e4 = eps * eps * eps * eps;
  return e4 * pi0 + (1.0 - e4) * pi_unbiased(dims);
}

double mean_purity(double eps, double pi0, const Bipartition& dims,
                   MeasureKind measure) {
  if (measure == MeasureKind::GaussianApprox)
    return mean_purity(eps, pi0, dims);
  check_eps(eps, "mean_purity");
  // Sphere measure: the random component's own purity follows the exact
  // finite-dimensional law, while the mixed traces keep their Gaussian
  // values (they involve second moments only).
  const double e2 = eps * eps;
  const double c2 = 1.0 - e2;
  return e2 * e2 * pi0 + c2 * c2 * pi_unbiased_exact(dims) +
         2.0 * e2 * c2 * pi_unbiased(dims);
}

double mean_purity_separable(double eta, const Bipartition& dims) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::domain_error("mean_purity_separable: eta must lie in [0, 1]");
  const double e2 = 1.0 - eta * eta;
  const double e4 = e2 * e2;
  return e4 + (1.0 - e4) * pi_unbiased(dims);
}

double mean_purity_maxent(double eps, const Bipartition& dims) {
  if (dims.n_a > dims.n_b)
    throw std::domain_error("mean_purity_maxent: requires n_a <= n_b");
  return mean_purity(eps, 1.0 / dims.n_a, dims);
}

EpsilonSolution epsilon_for_purity(double target_purity,
                                   const Bipartition& dims) {
  if (dims.n_a > dims.n_b)
    throw std::domain_error("epsilon_for_purity: requires n_a <= n_b");
  const double floor = 1.0 / dims.n_a;
  if (!(target_purity >= floor && target_purity <= 1.0))
    throw std::domain_error(
        "epsilon_for_purity: target purity must lie in [1/N, 1]");
  const double pu = pi_unbiased(dims);
  if (target_purity == pu)
    return {0.0, pu, PolarizationKind::Unbiased};
  const double pi0 = target_purity > pu ? 1.0 : floor;
  const double e4 = (target_purity - pu) / (pi0 - pu);
  return {std::pow(e4, 0.25), pi0,
          target_purity > pu ? PolarizationKind::Separable
                             : PolarizationKind::MaxEntangled};
}

ThresholdResult eta_star(const Bipartition& dims) {
  const double pu = pi_unbiased(dims);
  if (pu > 0.5) return {1.0, 1.0, true};
  const double radicand = (1.0 - 2.0 * pu) / (2.0 - 2.0 * pu);
  const double eta_sq = 1.0 - std::sqrt(radicand);
  return {std::sqrt(eta_sq), eta_sq, false};
}

double eta_star_asymptotic() {
  return std::sqrt(1.0 - 1.0 / std::sqrt(2.0));
}

namespace {

double tail_bound(const Bipartition& dims, double alpha, double eps,
                  double denom_scale, const char* who) {
  if (!(alpha > 0.0))
    throw std::domain_error(std::string(who) + ": alpha must be > 0");
  check_eps(eps, who);
  if (eps == 1.0) return 0.0;
  const double nm = static_cast<double>(dims.n_a) * dims.n_b;
  return 2.0 *
         std::exp(-nm * alpha * alpha /
                  (denom_scale * (1.0 - eps * eps)));
}

}  // namespace

double norm_tail_bound(const Bipartition& dims, double alpha, double eps) {
  return tail_bound(dims, alpha, eps, 2.0, "norm_tail_bound");
}

double purity_tail_bound(const Bipartition& dims, double alpha, double eps) {
  return tail_bound(dims, alpha, eps, 32.0, "purity_tail_bound");
}

double delta_net_log_cardinality(int k, const Bipartition& dims,
                                 double delta) {
  if (k < 1)
    throw std::domain_error("delta_net_log_cardinality: k must be >= 1");
  if (!(delta > 0.0 && delta <= 1.0))
    throw std::domain_error(
        "delta_net_log_cardinality: delta must lie in (0, 1]");
  return 2.0 * k * (dims.n_a + dims.n_b) * std::log(10.0 / delta);
}

MomentIdentities expected_moments(const Bipartition& dims,
                                  MeasureKind measure) {
  const double tr_sigma_sq = measure == MeasureKind::GaussianApprox
                                 ? pi_unbiased(dims)
                                 : pi_unbiased_exact(dims);
  return {tr_sigma_sq, 1.0 / dims.n_a, 2.0 / dims.n_b, 0.0, 0.0};
}

double fourth_moment_coefficient(const Bipartition& dims,
                                 MeasureKind measure) {
  const double nm = static_cast<double>(dims.n_a) * dims.n_b;
  return measure == MeasureKind::GaussianApprox ? 1.0 / (nm * nm)
                                                : 1.0 / (nm * (nm + 1.0));
}

}  // namespace polens
