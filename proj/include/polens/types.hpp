#pragma once

#include <complex>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace polens {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
// Row-major view of a bipartite amplitude vector: row index = subsystem A,
// column index = subsystem B.
using StateMatrixView =
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>;

/// How the purely random component is distributed.
enum class MeasureKind {
  GaussianApprox,  ///< i.i.d. complex Gaussian amplitudes, variance 1/(N*M) each
  SphereUniform,   ///< uniform on the unit sphere of the joint Hilbert space
};

/// Shape of the deterministic component of a polarized ensemble.
enum class PolarizationKind {
  Unbiased,      ///< no bias: the reference state is itself random
  Separable,     ///< product reference state
  MaxEntangled,  ///< maximally entangled reference state
  FixedState,    ///< caller-supplied reference state
};

/// Dimensions (N, M) of a bipartite system H_A (x) H_B.
struct Bipartition {
  int n_a = 0;
  int n_b = 0;

  Bipartition() = default;
  Bipartition(int a, int b) : n_a(a), n_b(b) {
    if (a < 1 || b < 1)
      throw std::invalid_argument("Bipartition: dimensions must be >= 1");
  }

  int total() const { return n_a * n_b; }
  bool operator==(const Bipartition&) const = default;
};

/// Amplitude vector on H_A (x) H_B, indexed amp[i * n_b + mu].
/// Not required to be normalized; several ensembles are normalized only on
/// average.
class PureState {
 public:
  PureState(Bipartition dims, Vector amplitudes)
      : dims_(dims), amp_(std::move(amplitudes)) {
    if (amp_.size() != dims_.total())
      throw std::invalid_argument(
          "PureState: amplitude count does not match n_a * n_b");
  }

  const Bipartition& dims() const { return dims_; }
  const Vector& amplitudes() const { return amp_; }
  Vector& amplitudes() { return amp_; }

  double norm_squared() const { return amp_.squaredNorm(); }

  /// N x M matrix view of the amplitudes (no copy).
  StateMatrixView as_matrix() const {
    return StateMatrixView(amp_.data(), dims_.n_a, dims_.n_b);
  }

 private:
  Bipartition dims_;
  Vector amp_;
};

/// Hermitian operator on a single subsystem. Trace is not constrained: reduced
/// states of non-normalized vectors and weighted sums are representable.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1)
      throw std::invalid_argument("DensityMatrix: matrix must be square");
    const double scale =
        std::max({std::abs(m_.trace()), m_.norm(), 1e-300});
    const double residual = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (residual > 1e-12 * scale)
      throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double trace_real() const { return m_.trace().real(); }

 private:
  Matrix m_;
};

}  // namespace polens
