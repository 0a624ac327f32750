#pragma once

#include "polens/types.hpp"

namespace polens {

/// Reduced operator on subsystem A: rho_A = Tr_B |psi><psi|.
/// Tr(rho_A) equals the squared norm of psi; no normalization is applied.
DensityMatrix partial_trace_b(const PureState& psi);

/// Tr(rho^2), evaluated as the squared Frobenius norm of the Hermitian input.
double purity(const DensityMatrix& rho);

/// Inverse participation ratio (Tr rho)^2 / Tr(rho^2). Invariant under
/// rescaling of rho. Throws std::domain_error when the trace or purity
/// vanishes.
double effective_dimension(const DensityMatrix& rho);

/// Tr(a * b) for Hermitian a, b of equal dimension (real by symmetry).
double trace_product(const DensityMatrix& a, const DensityMatrix& b);

/// Hermitian interference operator Tr_B(|phi0><phi| + |phi><phi0|).
DensityMatrix cross_operator(const PureState& phi0, const PureState& phi);

/// Purity of eps*phi0 + sqrt(1-eps^2)*phi assembled from the six weighted
/// traces of the reduced components, without forming the superposed state.
/// Matches purity(partial_trace_b(superposed)) to floating-point accuracy.
double purity_decomposition(const PureState& phi0, const PureState& phi,
                            double eps);

/// Unit-norm copy. Throws std::domain_error on the zero vector.
PureState normalized(const PureState& psi);

}  // namespace polens
