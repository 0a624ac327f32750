#pragma once

#include <optional>
#include <random>

#include "polens/rng.hpp"
#include "polens/types.hpp"

namespace polens {

/// Description of the deterministic component mixed into each sample.
struct PolarizationSpec {
  PolarizationKind kind = PolarizationKind::Unbiased;
  double epsilon = 0.0;  ///< amplitude of the reference component, in [0, 1]
  /// Re-draw the local bases of the reference state for every sample. When
  /// false, Separable uses |0>|0> and MaxEntangled the canonical pair basis.
  bool randomize_local = true;
  /// Unit-norm reference state; required iff kind == FixedState.
  std::optional<PureState> fixed_state;

  void validate(const Bipartition& dims) const;
};

/// Amplitudes i.i.d. complex Gaussian with E|c|^2 = 1/(N*M); unit norm on
/// average only.
PureState gaussian_state(const Bipartition& dims, std::mt19937_64& eng);
PureState gaussian_state(const Bipartition& dims, const RngStream& stream);

/// Uniform draw from the unit sphere of H_A (x) H_B.
PureState sphere_state(const Bipartition& dims, std::mt19937_64& eng);
PureState sphere_state(const Bipartition& dims, const RngStream& stream);

/// Haar-distributed unitary, via QR of a complex Ginibre matrix with the
/// R-diagonal phase ambiguity fixed.
Matrix haar_unitary(int dim, std::mt19937_64& eng);
Matrix haar_unitary(int dim, const RngStream& stream);

/// Product state xi (x) chi from explicit factors (used as given).
PureState separable_state(const Bipartition& dims, const Vector& xi,
                          const Vector& chi);
/// Random product state with independent sphere-uniform unit factors.
PureState separable_state(const Bipartition& dims, std::mt19937_64& eng);

/// (1/sqrt(N)) sum_i |i>_A |i>_B. Requires n_a <= n_b.
PureState max_entangled_state(const Bipartition& dims);

/// eps * phi0 + sqrt(1 - eps^2) * phi. Not renormalized.
PureState superpose(double eps, const PureState& phi0, const PureState& phi);

/// The reference state |phi0> a polarized draw superposes onto the random
/// component. Consumes eng only for the random choices the spec calls for.
PureState reference_state(const PolarizationSpec& spec, const Bipartition& dims,
                          MeasureKind measure, std::mt19937_64& eng);

/// One draw from the polarized ensemble. The reference state consumes
/// substream(0) and the random component substream(1), so the two are
/// independent and individually replayable.
PureState polarized_sample(const PolarizationSpec& spec,
                           const Bipartition& dims, MeasureKind measure,
                           const RngStream& stream);

/// Separable state with sphere-uniform admixture of weight eta:
/// sqrt(1 - eta^2) * phi0 + eta * phi. A null fixed_product means a fresh
/// random product reference per call.
PureState noisy_separable_sample(double eta, const Bipartition& dims,
                                 const RngStream& stream,
                                 const PureState* fixed_product = nullptr);

struct FixedPuritySample {
  PureState state;
  double epsilon;
  double pi0;
  PolarizationKind kind;
};

/// Draw whose ensemble-mean purity equals target_purity: picks the reference
/// family and solves for eps, then samples with locally randomized reference.
/// Valid targets lie in [1/N, 1]; requires n_a <= n_b.
FixedPuritySample fixed_purity_sample(
    double target_purity, const Bipartition& dims, const RngStream& stream,
    MeasureKind measure = MeasureKind::SphereUniform);

}  // namespace polens
