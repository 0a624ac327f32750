#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "polens/analytics.hpp"
#include "polens/linalg.hpp"
#include "polens/rng.hpp"
#include "polens/sampling.hpp"

using namespace polens;

namespace {

struct MeanStderr {
  double mean;
  double standard_error;
};

template <class Draw>
MeanStderr sample_mean(long long n, Draw&& draw) {
  std::vector<double> xs(n);
  for (long long t = 0; t < n; ++t) xs[t] = draw(t);
  double sum = 0.0;
  for (const double x : xs) sum += x;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (const double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  return {mean, sd / std::sqrt(static_cast<double>(n))};
}

PureState basis_product(const Bipartition& dims) {
  Vector xi = Vector::Zero(dims.n_a);
  Vector chi = Vector::Zero(dims.n_b);
  xi[0] = 1.0;
  chi[0] = 1.0;
  return separable_state(dims, xi, chi);
}

}  // namespace

TEST_CASE("gaussian states are unit norm on average only") {
  const Bipartition dims(2, 2);
  const auto stats = sample_mean(20000, [&](long long t) {
    return gaussian_state(dims, RngStream(11, static_cast<std::uint64_t>(t)))
        .norm_squared();
  });
  CHECK(std::abs(stats.mean - 1.0) <= 4.0 * stats.standard_error);
  // Individual draws fluctuate.
  const PureState one = gaussian_state(dims, RngStream(11, 0));
  CHECK(std::abs(one.norm_squared() - 1.0) > 1e-6);
}

TEST_CASE("sphere states are exactly unit norm") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    const PureState psi = sphere_state(Bipartition(3, 5), RngStream(12, t));
    CHECK(std::abs(psi.norm_squared() - 1.0) <= 1e-12);
  }
}

TEST_CASE("sphere draw is the normalized gaussian draw of the same stream") {
  const Bipartition dims(4, 4);
  const RngStream stream(13, 99);
  const PureState sph = sphere_state(dims, stream);
  const PureState gau = normalized(gaussian_state(dims, stream));
  CHECK((sph.amplitudes() - gau.amplitudes()).norm() == 0.0);
}

TEST_CASE("haar unitaries are unitary to working precision") {
  for (const int dim : {1, 2, 3, 8, 30}) {
    const Matrix u = haar_unitary(dim, RngStream(14, dim));
    const Matrix delta =
        u.adjoint() * u - Matrix::Identity(dim, dim);
    CHECK(delta.cwiseAbs().maxCoeff() <= 1e-12);
  }
  CHECK_THROWS_AS(haar_unitary(0, RngStream(14, 0)), std::invalid_argument);
}

TEST_CASE("haar entries have the uniform column distribution") {
  const int dim = 4;
  const auto stats = sample_mean(20000, [&](long long t) {
    const Matrix u =
        haar_unitary(dim, RngStream(15, static_cast<std::uint64_t>(t)));
    return std::norm(u(0, 0));
  });
  CHECK(std::abs(stats.mean - 1.0 / dim) <= 4.0 * stats.standard_error);
}

TEST_CASE("explicit product states assemble the tensor product") {
  const Bipartition dims(2, 3);
  Vector xi(2), chi(3);
  xi << Complex(0.6, 0.0), Complex(0.0, 0.8);
  chi << Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0);
  const PureState psi = separable_state(dims, xi, chi);
  CHECK(psi.amplitudes()[0] == Complex(0.6, 0.0));
  CHECK(psi.amplitudes()[3] == Complex(0.0, 0.8));
  CHECK(psi.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(separable_state(dims, chi, xi), std::invalid_argument);
}

TEST_CASE("random product states have pure marginals") {
  const Bipartition dims(3, 4);
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto eng = RngStream(16, t).engine();
    const PureState psi = separable_state(dims, eng);
    CHECK(std::abs(psi.norm_squared() - 1.0) <= 1e-12);
    CHECK(std::abs(purity(partial_trace_b(psi)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("maximally entangled state has the flat Schmidt spectrum") {
  const PureState phi = max_entangled_state(Bipartition(2, 4));
  CHECK(phi.amplitudes()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(phi.amplitudes()[5].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(phi.norm_squared() - 1.0) <= 1e-14);
  CHECK(purity(partial_trace_b(phi)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(max_entangled_state(Bipartition(3, 2)), std::domain_error);
}

TEST_CASE("superpose forms the polarized combination without renormalizing") {
  const Bipartition dims(2, 2);
  const PureState phi0 = basis_product(dims);
  const PureState phi = gaussian_state(dims, RngStream(17, 0));
  const PureState at_one = superpose(1.0, phi0, phi);
  CHECK((at_one.amplitudes() - phi0.amplitudes()).norm() == 0.0);
  const PureState at_zero = superpose(0.0, phi0, phi);
  CHECK((at_zero.amplitudes() - phi.amplitudes()).norm() == 0.0);
  const double eps = 0.6;
  const PureState mid = superpose(eps, phi0, phi);
  const Vector expect =
      eps * phi0.amplitudes() + std::sqrt(1 - eps * eps) * phi.amplitudes();
  CHECK((mid.amplitudes() - expect).norm() == 0.0);
  CHECK_THROWS_AS(superpose(1.2, phi0, phi), std::domain_error);
  CHECK_THROWS_AS(
      superpose(0.5, phi0, gaussian_state(Bipartition(2, 3), RngStream(1, 1))),
      std::invalid_argument);
}

TEST_CASE("polarized draws replay bitwise from their stream") {
  const Bipartition dims(3, 3);
  for (const MeasureKind measure :
       {MeasureKind::GaussianApprox, MeasureKind::SphereUniform}) {
    for (const PolarizationKind kind :
         {PolarizationKind::Unbiased, PolarizationKind::Separable,
          PolarizationKind::MaxEntangled}) {
      PolarizationSpec spec;
      spec.kind = kind;
      spec.epsilon = 0.6;
      const PureState a = polarized_sample(spec, dims, measure,
                                           RngStream(18, 5));
      const PureState b = polarized_sample(spec, dims, measure,
                                           RngStream(18, 5));
      CHECK((a.amplitudes() - b.amplitudes()).norm() == 0.0);
    }
  }
}

TEST_CASE("polarized draws split reference and noise into substreams") {
  const Bipartition dims(2, 4);
  PolarizationSpec spec;
  spec.kind = PolarizationKind::Separable;
  spec.epsilon = 0.8;
  spec.randomize_local = false;
  const RngStream stream(19, 3);
  const PureState drawn =
      polarized_sample(spec, dims, MeasureKind::GaussianApprox, stream);
  // Deterministic reference |0>|0> plus the noise drawn from substream 1.
  const PureState noise = gaussian_state(dims, stream.substream(1));
  const PureState expect = superpose(0.8, basis_product(dims), noise);
  CHECK((drawn.amplitudes() - expect.amplitudes()).norm() == 0.0);
}

TEST_CASE("fully polarized draws reproduce the reference purity exactly") {
  const Bipartition dims(4, 4);
  PolarizationSpec spec;
  spec.epsilon = 1.0;
  spec.kind = PolarizationKind::Separable;
  for (std::uint64_t t = 0; t < 10; ++t) {
    const PureState psi = polarized_sample(spec, dims,
                                           MeasureKind::SphereUniform,
                                           RngStream(20, t));
    CHECK(std::abs(purity(partial_trace_b(psi)) - 1.0) <= 1e-12);
  }
  spec.kind = PolarizationKind::MaxEntangled;
  for (std::uint64_t t = 0; t < 10; ++t) {
    const PureState psi = polarized_sample(spec, dims,
                                           MeasureKind::SphereUniform,
                                           RngStream(21, t));
    CHECK(std::abs(purity(partial_trace_b(psi)) - 0.25) <= 1e-12);
  }
}

TEST_CASE("polarization spec validation is fail-closed") {
  const Bipartition dims(2, 2);
  PolarizationSpec spec;
  spec.epsilon = 1.5;
  CHECK_THROWS_AS(spec.validate(dims), std::domain_error);
  spec.epsilon = 0.5;
  spec.kind = PolarizationKind::FixedState;
  CHECK_THROWS_AS(spec.validate(dims), std::invalid_argument);
  spec.fixed_state = gaussian_state(Bipartition(2, 3), RngStream(22, 0));
  CHECK_THROWS_AS(spec.validate(dims), std::invalid_argument);
  spec.fixed_state = gaussian_state(dims, RngStream(22, 1));  // not unit
  CHECK_THROWS_AS(spec.validate(dims), std::domain_error);
  spec.fixed_state = sphere_state(dims, RngStream(22, 2));
  CHECK_NOTHROW(spec.validate(dims));
  spec.kind = PolarizationKind::Separable;  // leftover payload
  CHECK_THROWS_AS(spec.validate(dims), std::invalid_argument);
  PolarizationSpec maxent;
  maxent.kind = PolarizationKind::MaxEntangled;
  CHECK_THROWS_AS(maxent.validate(Bipartition(4, 2)), std::domain_error);
}

TEST_CASE("noisy separable draws interpolate between product and noise") {
  const Bipartition dims(3, 3);
  const PureState quiet =
      noisy_separable_sample(0.0, dims, RngStream(23, 0));
  CHECK(std::abs(purity(partial_trace_b(quiet)) - 1.0) <= 1e-12);
  const RngStream stream(23, 1);
  const PureState loud = noisy_separable_sample(1.0, dims, stream);
  const PureState noise = sphere_state(dims, stream.substream(1));
  CHECK((loud.amplitudes() - noise.amplitudes()).norm() <= 1e-15);
  CHECK_THROWS_AS(noisy_separable_sample(-0.1, dims, stream),
                  std::domain_error);
  const PureState fixed = basis_product(dims);
  const PureState a = noisy_separable_sample(0.5, dims, stream, &fixed);
  const PureState b =
      superpose(std::sqrt(0.75), fixed, sphere_state(dims,
                                                     stream.substream(1)));
  CHECK((a.amplitudes() - b.amplitudes()).norm() == 0.0);
}

TEST_CASE("noisy separable ensemble mean tracks the closed form") {
  const Bipartition dims(4, 4);
  const double eta = 0.55;
  const auto stats = sample_mean(4000, [&](long long t) {
    const PureState psi = noisy_separable_sample(
        eta, dims, RngStream(24, static_cast<std::uint64_t>(t)));
    return purity(partial_trace_b(psi));
  });
  CHECK(std::abs(stats.mean - mean_purity_separable(eta, dims)) <=
        4.0 * stats.standard_error);
}

TEST_CASE("fixed purity draws report the solved parameters") {
  const Bipartition dims(8, 8);
  const FixedPuritySample sample =
      fixed_purity_sample(0.625, dims, RngStream(25, 0));
  CHECK(sample.kind == PolarizationKind::Separable);
  CHECK(sample.pi0 == 1.0);
  CHECK(std::abs(sample.epsilon - 0.8408964152537145) <= 1e-12);
  const FixedPuritySample low =
      fixed_purity_sample(0.2, dims, RngStream(25, 1));
  CHECK(low.kind == PolarizationKind::MaxEntangled);
  CHECK(low.pi0 == doctest::Approx(0.125).epsilon(1e-15));
  CHECK_THROWS_AS(fixed_purity_sample(0.05, dims, RngStream(25, 2)),
                  std::domain_error);
}

TEST_CASE("fixed purity ensemble hits its target on average") {
  const Bipartition dims(8, 8);
  const double target = 0.45;
  const auto stats = sample_mean(4000, [&](long long t) {
    const FixedPuritySample s = fixed_purity_sample(
        target, dims, RngStream(26, static_cast<std::uint64_t>(t)));
    return purity(partial_trace_b(s.state));
  });
  CHECK(std::abs(stats.mean - target) <= 4.0 * stats.standard_error);
}

TEST_CASE("locally randomized references leave the purity law unchanged") {
  const Bipartition dims(4, 4);
  PolarizationSpec randomized;
  randomized.kind = PolarizationKind::MaxEntangled;
  randomized.epsilon = 0.7;
  randomized.randomize_local = true;
  PolarizationSpec pinned = randomized;
  pinned.randomize_local = false;
  const auto a = sample_mean(4000, [&](long long t) {
    return purity(partial_trace_b(polarized_sample(
        randomized, dims, MeasureKind::GaussianApprox,
        RngStream(27, static_cast<std::uint64_t>(t)))));
  });
  const auto b = sample_mean(4000, [&](long long t) {
    return purity(partial_trace_b(polarized_sample(
        pinned, dims, MeasureKind::GaussianApprox,
        RngStream(28, static_cast<std::uint64_t>(t)))));
  });
  const double combined = std::sqrt(a.standard_error * a.standard_error +
                                    b.standard_error * b.standard_error);
  CHECK(std::abs(a.mean - b.mean) <= 4.0 * combined);
}
