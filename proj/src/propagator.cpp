#include "qwalk/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

using cplx = std::complex<double>;

// exp(-i dt T) e_1 for the leading m x m block of a real symmetric tridiagonal T.
Eigen::VectorXcd tridiagonal_exp_e1(const std::vector<double>& alpha,
                                    const std::vector<double>& beta, int m, double dt) {
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    T(j, j) = alpha[static_cast<std::size_t>(j)];
    if (j + 1 < m) {
      T(j, j + 1) = beta[static_cast<std::size_t>(j)];
      T(j + 1, j) = beta[static_cast<std::size_t>(j)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(T);
  const Eigen::MatrixXd& Q = eig.eigenvectors();
  Eigen::VectorXcd coeff(m);
  for (int k = 0; k < m; ++k) {
    coeff[k] = std::exp(cplx(0.0, -dt * eig.eigenvalues()[k])) * Q(0, k);
  }
  return Q.cast<cplx>() * coeff;
}

}  // namespace

Eigen::VectorXcd krylov_expv(const HermitianOp& apply, const Eigen::VectorXcd& v, double t,
                             const KrylovOptions& options, KrylovStats* stats) {
  if (!std::isfinite(t)) throw Error(ErrorKind::invalid_argument, "non-finite evolution time");
  Eigen::VectorXcd w = v;
  const double v_norm = v.norm();
  if (t == 0.0 || v_norm == 0.0) return w;

  const int n = static_cast<int>(v.size());
  const int m_max = std::max(2, std::min(options.max_dimension, n));
  const double sign = t < 0 ? -1.0 : 1.0;
  const double total = std::abs(t);
  double done = 0.0;

  std::vector<Eigen::VectorXcd> V;
  V.reserve(static_cast<std::size_t>(m_max) + 1);
  std::vector<double> alpha;
  std::vector<double> beta;
  Eigen::VectorXcd tmp(n);

  while (done < total) {
    const double remaining = total - done;
    const double norm = w.norm();
    V.clear();
    alpha.clear();
    beta.clear();
    V.push_back(w / norm);

    int m = 0;
    bool breakdown = false;
    double dt = remaining;
    Eigen::VectorXcd y;
    for (int j = 0; j < m_max; ++j) {
      apply(V[static_cast<std::size_t>(j)], tmp);
      if (stats) ++stats->matvecs;
      const double a = V[static_cast<std::size_t>(j)].dot(tmp).real();
      alpha.push_back(a);
      tmp -= a * V[static_cast<std::size_t>(j)];
      if (j > 0) tmp -= beta[static_cast<std::size_t>(j - 1)] * V[static_cast<std::size_t>(j - 1)];
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : V) tmp -= q.dot(tmp) * q;
      }
      const double b = tmp.norm();
      m = j + 1;
      const double budget = options.tolerance * (dt / total);
      if (b <= 1e-14 * std::max(1.0, std::abs(a))) {
        breakdown = true;  // invariant subspace reached: exact for any dt
        y = tridiagonal_exp_e1(alpha, beta, m, sign * dt);
        break;
      }
      beta.push_back(b);
      y = tridiagonal_exp_e1(alpha, beta, m, sign * dt);
      if (b * std::abs(y[m - 1]) * norm <= budget) break;
      V.push_back(tmp / b);
    }

    if (!breakdown) {
      // Shrink the step until the estimate with the available basis is within budget.
      const double b = beta[static_cast<std::size_t>(m - 1)];
      int halvings = 0;
      while (b * std::abs(y[m - 1]) * norm > options.tolerance * (dt / total)) {
        dt *= 0.5;
        if (++halvings > 60) {
          throw Error(ErrorKind::integration_failure, "Krylov step size underflow");
        }
        y = tridiagonal_exp_e1(alpha, beta, m, sign * dt);
      }
    }

    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(n);
    for (int k = 0; k < m; ++k) next += y[k] * V[static_cast<std::size_t>(k)];
    w = norm * next;
    done += dt;
    if (stats) ++stats->substeps;
  }
  return w;
}

DenseSpectrum::DenseSpectrum(const Eigen::MatrixXd& symmetric) {
  if (symmetric.size() == 0) return;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(symmetric);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorKind::integration_failure, "dense eigendecomposition failed");
  }
  values_ = eig.eigenvalues();
  vectors_ = eig.eigenvectors();
}

Eigen::VectorXcd DenseSpectrum::evolve(const Eigen::VectorXcd& v, double t) const {
  if (v.size() != values_.size()) {
    throw Error(ErrorKind::inconsistent_basis, "state dimension does not match spectrum");
  }
  Eigen::VectorXcd coeff = vectors_.transpose() * v;
  for (Eigen::Index k = 0; k < coeff.size(); ++k) {
    coeff[k] *= std::exp(std::complex<double>(0.0, -t * values_[k]));
  }
  return vectors_ * coeff;
}

}  // namespace qwalk
