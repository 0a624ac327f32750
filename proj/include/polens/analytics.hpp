#pragma once

#include "polens/types.hpp"

namespace polens {

/// Mean reduced purity of an unnormalized Gaussian random state:
/// (M + N) / (M * N).
double pi_unbiased(const Bipartition& dims);

/// Exact mean reduced purity under the sphere-uniform measure:
/// (M + N) / (M * N + 1).
double pi_unbiased_exact(const Bipartition& dims);

/// Ensemble-mean purity at polarization eps toward a reference of reduced
/// purity pi0, Gaussian random component:
/// eps^4 * pi0 + (1 - eps^4) * pi_unbiased. Exact at every eps.
double mean_purity(double eps, double pi0, const Bipartition& dims);

/// Measure-aware ensemble-mean purity for a deterministic unit reference of
/// reduced purity pi0. The random component contributes its measure's own
/// second and fourth moments; for GaussianApprox this reduces to the closed
/// form above.
double mean_purity(double eps, double pi0, const Bipartition& dims,
                   MeasureKind measure);

/// Mean purity of a separable state with sphere-noise amplitude eta
/// (reference purity 1, eps^2 = 1 - eta^2).
double mean_purity_separable(double eta, const Bipartition& dims);

/// Mean purity when the reference is maximally entangled (pi0 = 1/N).
double mean_purity_maxent(double eps, const Bipartition& dims);

struct EpsilonSolution {
  double epsilon;
  double pi0;
  PolarizationKind kind;
};

/// Inverts the mean-purity law: picks the reference family (product above
/// pi_unbiased, maximally entangled below, unbiased at the tie) and solves
/// eps^4 = (target - pi_unb) / (pi0 - pi_unb). Targets must lie in [1/N, 1]
/// and n_a <= n_b.
EpsilonSolution epsilon_for_purity(double target_purity,
                                   const Bipartition& dims);

struct ThresholdResult {
  double eta_star;
  double eta_star_squared;
  bool saturated;
};

/// Largest noise amplitude at which the mean effective dimension of a noisy
/// separable ensemble stays below 2. Saturated (eta_star = 1) when even pure
/// noise cannot reach effective dimension 2, i.e. pi_unbiased > 1/2.
ThresholdResult eta_star(const Bipartition& dims);

/// Large-dimension limit of eta_star: sqrt(1 - 1/sqrt(2)).
double eta_star_asymptotic();

/// Upper bound on P(|norm^2 - 1| >= alpha) for a polarized Gaussian draw:
/// 2 exp(-N M alpha^2 / (2 (1 - eps^2))). Zero at eps = 1 (the draw is
/// deterministic). Requires alpha > 0.
double norm_tail_bound(const Bipartition& dims, double alpha, double eps);

/// Upper bound on P(|purity - mean purity| >= alpha):
/// 2 exp(-N M alpha^2 / (32 (1 - eps^2))). Zero at eps = 1. Requires
/// alpha > 0.
double purity_tail_bound(const Bipartition& dims, double alpha, double eps);

/// Log-cardinality bound for a delta-net over k-fold product states:
/// 2 k (N + M) ln(10 / delta). Requires k >= 1 and delta in (0, 1].
double delta_net_log_cardinality(int k, const Bipartition& dims, double delta);

/// First and second moments of the reduced traces entering the purity
/// decomposition, for a unit reference and a random component of the given
/// measure. The two cross traces vanish by phase invariance.
struct MomentIdentities {
  double tr_sigma_sq;     ///< E[Tr sigma^2]
  double tr_sigma0_sigma; ///< E[Tr sigma0 sigma] = 1/N
  double tr_s_sq;         ///< E[Tr S^2] = 2/M
  double tr_sigma0_s;     ///< 0
  double tr_sigma_s;      ///< 0
};

MomentIdentities expected_moments(const Bipartition& dims, MeasureKind measure);

/// Coefficient of both Kronecker-delta terms in the quartic amplitude moment
/// E[X_{i mu} conj(X_{j mu}) X_{j nu} conj(X_{i nu})]:
/// 1/(NM)^2 for the Gaussian measure, 1/(NM(NM+1)) on the sphere.
double fourth_moment_coefficient(const Bipartition& dims, MeasureKind measure);

}  // namespace polens
