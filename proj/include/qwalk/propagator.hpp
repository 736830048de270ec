#pragma once

// Action of exp(-i t H) on a vector for Hermitian H, either through an
// adaptive Lanczos (Krylov) approximation or an explicit eigendecomposition.

#include <functional>

#include <Eigen/Dense>

namespace qwalk {

/// out = H * in. Must not alias.
using HermitianOp = std::function<void(const Eigen::VectorXcd& in, Eigen::VectorXcd& out)>;

struct KrylovOptions {
  double tolerance = 1e-12;  // absolute 2-norm error budget over the full interval
  int max_dimension = 40;
};

struct KrylovStats {
  int substeps = 0;
  int matvecs = 0;
};

/// exp(-i t H) v via Lanczos with full reorthogonalization. The interval is
/// split adaptively whenever the a-posteriori error estimate
/// beta_{m+1} |[exp(-i dt T_m) e_1]_m| exceeds the per-step budget.
Eigen::VectorXcd krylov_expv(const HermitianOp& apply, const Eigen::VectorXcd& v, double t,
                             const KrylovOptions& options = {}, KrylovStats* stats = nullptr);

/// Eigendecomposition of a real symmetric matrix, used as the dense
/// propagator and as the test oracle for the Krylov path.
class DenseSpectrum {
 public:
  explicit DenseSpectrum(const Eigen::MatrixXd& symmetric);

  const Eigen::VectorXd& eigenvalues() const noexcept { return values_; }
  const Eigen::MatrixXd& eigenvectors() const noexcept { return vectors_; }

  /// exp(-i t H) v
  Eigen::VectorXcd evolve(const Eigen::VectorXcd& v, double t) const;

 private:
  Eigen::VectorXd values_;
  Eigen::MatrixXd vectors_;
};

}  // namespace qwalk
