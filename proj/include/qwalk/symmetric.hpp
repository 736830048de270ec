#pragma once

// The D_N-symmetric sector of a ring subspace, spanned by bracelet states.
// The walk from |0> and the global Hamming phasor never leave it, so bracelet
// protocols run in a space roughly 2N times smaller than the full subspace.

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/ctqw.hpp"

namespace qwalk {

class BraceletSector {
 public:
  /// Throws inconsistent-target if the basis is not closed under ring symmetries.
  explicit BraceletSector(BasisPtr basis);

  const SubspaceBasis& basis() const noexcept { return *basis_; }
  const BasisPtr& basis_ptr() const noexcept { return basis_; }
  std::size_t size() const noexcept { return orbits_.size(); }
  const std::vector<DihedralOrbit>& orbits() const noexcept { return orbits_; }

  /// Index of the orbit containing z, if z is in the subspace.
  std::optional<std::size_t> orbit_index(Bitstring z) const;
  std::size_t zero_index() const { return *orbit_index(0); }

  /// <[z]|G|[z']> = sum over members of G_uv / sqrt(|[z]| |[z']|).
  const Eigen::MatrixXd& generator() const noexcept { return generator_; }
  /// Hamming weight of each orbit.
  const Eigen::VectorXd& weights() const noexcept { return weights_; }
  const DenseSpectrum& spectrum() const noexcept { return spectrum_; }

  /// Reduced coordinates -> full-basis amplitudes.
  Eigen::VectorXcd lift(const Eigen::VectorXcd& reduced) const;
  /// Full-basis amplitudes -> coefficients on the bracelet states.
  Eigen::VectorXcd project(const Eigen::VectorXcd& full) const;

 private:
  BasisPtr basis_;
  std::vector<DihedralOrbit> orbits_;
  std::vector<std::size_t> orbit_of_state_;
  Eigen::MatrixXd generator_;
  Eigen::VectorXd weights_;
  DenseSpectrum spectrum_;
};

}  // namespace qwalk
