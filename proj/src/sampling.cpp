#include "polens/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "polens/analytics.hpp"

namespace polens {

namespace {

// Component draws are ordered (re, im) per amplitude, amplitude index
// ascending, so every sampler is a fixed function of its engine state.
Vector standard_complex_vector(Eigen::Index size, std::mt19937_64& eng,
                               double sigma) {
  std::normal_distribution<double> normal(0.0, sigma);
  Vector v(size);
  for (Eigen::Index k = 0; k < size; ++k) {
    const double re = normal(eng);
    const double im = normal(eng);
    v[k] = Complex(re, im);
  }
  return v;
}

Vector sphere_vector(Eigen::Index size, std::mt19937_64& eng) {
  Vector v = standard_complex_vector(size, eng, 1.0);
  const double norm = v.norm();
  if (norm == 0.0)
    throw std::runtime_error("sphere draw: zero vector");
  return v / norm;
}

}  // namespace

void PolarizationSpec::validate(const Bipartition& dims) const {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::domain_error("PolarizationSpec: epsilon must lie in [0, 1]");
  if (kind == PolarizationKind::FixedState) {
    if (!fixed_state)
      throw std::invalid_argument(
          "PolarizationSpec: FixedState requires a reference state");
    if (!(fixed_state->dims() == dims))
      throw std::invalid_argument(
          "PolarizationSpec: reference state dimensions do not match");
    if (std::abs(fixed_state->norm_squared() - 1.0) > 1e-9)
      throw std::domain_error(
          "PolarizationSpec: reference state must have unit norm");
  } else if (fixed_state) {
    throw std::invalid_argument(
        "PolarizationSpec: reference state given but kind is not FixedState");
  }
  if (kind == PolarizationKind::MaxEntangled && dims.n_a > dims.n_b)
    throw std::domain_error(
        "PolarizationSpec: MaxEntangled requires n_a <= n_b");
}

PureState gaussian_state(const Bipartition& dims, std::mt19937_64& eng) {
  // E|c|^2 = 1/(N M): each quadrature has variance 1/(2 N M).
  const double sigma = 1.0 / std::sqrt(2.0 * dims.total());
  return PureState(dims, standard_complex_vector(dims.total(), eng, sigma));
}

PureState gaussian_state(const Bipartition& dims, const RngStream& stream) {
  auto eng = stream.engine();
  return gaussian_state(dims, eng);
}

PureState sphere_state(const Bipartition& dims, std::mt19937_64& eng) {
  Vector v = gaussian_state(dims, eng).amplitudes();
  const double norm = v.norm();
  if (norm == 0.0)
    throw std::runtime_error("sphere_state: zero vector");
  return PureState(dims, v / norm);
}

PureState sphere_state(const Bipartition& dims, const RngStream& stream) {
  auto eng = stream.engine();
  return sphere_state(dims, eng);
}

Matrix haar_unitary(int dim, std::mt19937_64& eng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dim must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix z(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) {
      const double re = normal(eng);
      const double im = normal(eng);
      z(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix u = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  // Fix the phase freedom of QR so the result is Haar, not merely unitary:
  // rescale each column by the phase of the matching R diagonal.
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    u.col(j) *= a == 0.0 ? Complex(1.0, 0.0) : d / a;
  }
  return u;
}

Matrix haar_unitary(int dim, const RngStream& stream) {
  auto eng = stream.engine();
  return haar_unitary(dim, eng);
}

PureState separable_state(const Bipartition& dims, const Vector& xi,
                          const Vector& chi) {
  if (xi.size() != dims.n_a || chi.size() != dims.n_b)
    throw std::invalid_argument("separable_state: factor size mismatch");
  Vector amp(dims.total());
  for (int i = 0; i < dims.n_a; ++i)
    amp.segment(static_cast<Eigen::Index>(i) * dims.n_b, dims.n_b) =
        xi[i] * chi;
  return PureState(dims, amp);
}

PureState separable_state(const Bipartition& dims, std::mt19937_64& eng) {
  const Vector xi = sphere_vector(dims.n_a, eng);
  const Vector chi = sphere_vector(dims.n_b, eng);
  return separable_state(dims, xi, chi);
}

PureState max_entangled_state(const Bipartition& dims) {
  if (dims.n_a > dims.n_b)
    throw std::domain_error("max_entangled_state: requires n_a <= n_b");
  Vector amp = Vector::Zero(dims.total());
  const double c = 1.0 / std::sqrt(static_cast<double>(dims.n_a));
  for (int i = 0; i < dims.n_a; ++i)
    amp[static_cast<Eigen::Index>(i) * dims.n_b + i] = c;
  return PureState(dims, amp);
}

PureState superpose(double eps, const PureState& phi0, const PureState& phi) {
  if (!(phi0.dims() == phi.dims()))
    throw std::invalid_argument("superpose: dimension mismatch");
  if (!(eps >= 0.0 && eps <= 1.0))
    throw std::domain_error("superpose: eps must lie in [0, 1]");
  return PureState(phi0.dims(),
                   eps * phi0.amplitudes() +
                       std::sqrt(1.0 - eps * eps) * phi.amplitudes());
}

PureState reference_state(const PolarizationSpec& spec,
                          const Bipartition& dims, MeasureKind measure,
                          std::mt19937_64& eng) {
  switch (spec.kind) {
    case PolarizationKind::Unbiased:
      return measure == MeasureKind::GaussianApprox ? gaussian_state(dims, eng)
                                                    : sphere_state(dims, eng);
    case PolarizationKind::Separable: {
      if (!spec.randomize_local) {
        Vector xi = Vector::Zero(dims.n_a);
        Vector chi = Vector::Zero(dims.n_b);
        xi[0] = 1.0;
        chi[0] = 1.0;
        return separable_state(dims, xi, chi);
      }
      return separable_state(dims, eng);
    }
    case PolarizationKind::MaxEntangled: {
      const PureState base = max_entangled_state(dims);
      if (!spec.randomize_local) return base;
      // Local orbit (U_A (x) U_B)|phi0>: as a matrix, U_A Psi0 U_B^T.
      const Matrix ua = haar_unitary(dims.n_a, eng);
      const Matrix ub = haar_unitary(dims.n_b, eng);
      const Matrix m = ua * base.as_matrix() * ub.transpose();
      Vector amp(dims.total());
      for (int i = 0; i < dims.n_a; ++i)
        for (int mu = 0; mu < dims.n_b; ++mu)
          amp[static_cast<Eigen::Index>(i) * dims.n_b + mu] = m(i, mu);
      return PureState(dims, amp);
    }
    case PolarizationKind::FixedState:
      return *spec.fixed_state;
  }
  throw std::logic_error("reference_state: unknown kind");
}

PureState polarized_sample(const PolarizationSpec& spec,
                           const Bipartition& dims, MeasureKind measure,
                           const RngStream& stream) {
  spec.validate(dims);
  auto ref_eng = stream.substream(0).engine();
  auto noise_eng = stream.substream(1).engine();
  const PureState phi0 = reference_state(spec, dims, measure, ref_eng);
  const PureState phi = measure == MeasureKind::GaussianApprox
                            ? gaussian_state(dims, noise_eng)
                            : sphere_state(dims, noise_eng);
  return superpose(spec.epsilon, phi0, phi);
}

PureState noisy_separable_sample(double eta, const Bipartition& dims,
                                 const RngStream& stream,
                                 const PureState* fixed_product) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::domain_error("noisy_separable_sample: eta must lie in [0, 1]");
  const double eps = std::sqrt(1.0 - eta * eta);
  PolarizationSpec spec;
  spec.epsilon = eps;
  if (fixed_product) {
    spec.kind = PolarizationKind::FixedState;
    spec.fixed_state = *fixed_product;
  } else {
    spec.kind = PolarizationKind::Separable;
  }
  return polarized_sample(spec, dims, MeasureKind::SphereUniform, stream);
}

FixedPuritySample fixed_purity_sample(double target_purity,
                                      const Bipartition& dims,
                                      const RngStream& stream,
                                      MeasureKind measure) {
  const EpsilonSolution sol = epsilon_for_purity(target_purity, dims);
  PolarizationSpec spec;
  spec.kind = sol.kind;
  spec.epsilon = sol.epsilon;
  spec.randomize_local = true;
  return {polarized_sample(spec, dims, measure, stream), sol.epsilon, sol.pi0,
          sol.kind};
}

}  // namespace polens
