#include "polens/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace polens {

DensityMatrix partial_trace_b(const PureState& psi) {
  const auto m = psi.as_matrix();
  // (rho_A)_{ij} = sum_mu psi_{i,mu} conj(psi_{j,mu})
  Matrix rho = m * m.adjoint();
  // Enforce exact Hermiticity; the product is Hermitian up to rounding.
  rho = ((rho + rho.adjoint()) / 2.0).eval();
  return DensityMatrix(std::move(rho));
}

double purity(const DensityMatrix& rho) {
  return rho.matrix().squaredNorm();
}

double effective_dimension(const DensityMatrix& rho) {
  const double tr = rho.trace_real();
  const double p = purity(rho);
  if (tr == 0.0 || p == 0.0)
    throw std::domain_error("effective_dimension: zero trace or purity");
  return tr * tr / p;
}

double trace_product(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("trace_product: dimension mismatch");
  // Tr(ab) = sum_{ij} a_{ij} b_{ji} = sum_{ij} a_{ij} conj(b_{ij}) for
  // Hermitian b; real because both are Hermitian.
  return a.matrix().cwiseProduct(b.matrix().conjugate()).sum().real();
}

DensityMatrix cross_operator(const PureState& phi0, const PureState& phi) {
  if (!(phi0.dims() == phi.dims()))
    throw std::invalid_argument("cross_operator: dimension mismatch");
  const auto m0 = phi0.as_matrix();
  const auto m1 = phi.as_matrix();
  Matrix s = m0 * m1.adjoint();
  s = (s + s.adjoint()).eval();
  return DensityMatrix(std::move(s));
}

PureState normalized(const PureState& psi) {
  const double norm = std::sqrt(psi.norm_squared());
  if (norm == 0.0)
    throw std::domain_error("normalized: zero state");
  return PureState(psi.dims(), psi.amplitudes() / norm);
}

double purity_decomposition(const PureState& phi0, const PureState& phi,
                            double eps) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw std::domain_error("purity_decomposition: eps must lie in [0, 1]");
  const DensityMatrix sigma0 = partial_trace_b(phi0);
  const DensityMatrix sigma = partial_trace_b(phi);
  const DensityMatrix s = cross_operator(phi0, phi);

  const double e2 = eps * eps;
  const double c2 = 1.0 - e2;
  const double c = std::sqrt(c2);

  return e2 * e2 * purity(sigma0) + c2 * c2 * purity(sigma) +
         e2 * c2 * purity(s) + 2.0 * e2 * c2 * trace_product(sigma0, sigma) +
         2.0 * e2 * eps * c * trace_product(sigma0, s) +
         2.0 * eps * c2 * c * trace_product(sigma, s);
}

}  // namespace polens
