#pragma once

// States over a subspace basis and their evolution under the walk generator,
// diagonal phasors and the alternating phase-walk ansatz.

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "qwalk/propagator.hpp"
#include "qwalk/subspace.hpp"

namespace qwalk {

using BasisPtr = std::shared_ptr<const SubspaceBasis>;

BasisPtr make_basis(const ConstraintGraph& g);

struct StateVector {
  BasisPtr basis;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes.size()); }
};

StateVector basis_state(BasisPtr basis, Bitstring z);
StateVector zero_state(BasisPtr basis);

enum class PropagatorKind { automatic, krylov, dense };

/// Sparse symmetric adjacency of the Hamming-distance-1 walk graph, with a
/// lazily computed dense spectrum shared between copies.
class WalkGenerator {
 public:
  static constexpr std::size_t kDenseLimit = 2048;

  explicit WalkGenerator(BasisPtr basis);

  const SubspaceBasis& basis() const noexcept { return *basis_; }
  const BasisPtr& basis_ptr() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_->size(); }
  const Eigen::SparseMatrix<double>& matrix() const noexcept { return matrix_; }

  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
  HermitianOp as_operator() const;

  /// Computed on first use; throws invalid-argument above kDenseLimit unless forced.
  const DenseSpectrum& spectrum(bool force = false) const;
  bool has_spectrum() const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<DenseSpectrum> spectrum;
  };

  BasisPtr basis_;
  Eigen::SparseMatrix<double> matrix_;
  std::shared_ptr<Cache> cache_;
};

/// Diagonal generator C = sum_a c_a |a><a|.
class PhasorDiagonal {
 public:
  PhasorDiagonal(BasisPtr basis, Eigen::VectorXd coefficients);

  /// c_a = sum_i c_i z_i(a)
  static PhasorDiagonal site_linear(BasisPtr basis, std::span<const double> site_coefficients);
  /// c_a = number of occupied mask sites in a
  static PhasorDiagonal local_mask(BasisPtr basis, Bitstring mask);
  /// c_a = Hamming weight of a
  static PhasorDiagonal global_hamming(BasisPtr basis);

  const SubspaceBasis& basis() const noexcept { return *basis_; }
  const Eigen::VectorXd& coefficients() const noexcept { return coefficients_; }

 private:
  BasisPtr basis_;
  Eigen::VectorXd coefficients_;
};

enum class PhasorKind { local_sites, global_hamming };

struct AnsatzLayer {
  double gamma = 0.0;
  double tau = 0.0;
};

struct AnsatzSchedule {
  double tau0 = 0.0;
  std::vector<AnsatzLayer> layers;
  PhasorKind phasor_kind = PhasorKind::global_hamming;
  Bitstring phase_mask = 0;  // sites receiving the phase, used by local_sites

  std::size_t depth() const noexcept { return layers.size(); }
  double total_walk_time() const;
  /// Throws invalid-argument on negative or non-finite times.
  void validate() const;
};

PhasorDiagonal make_phasor(const AnsatzSchedule& schedule, BasisPtr basis);

StateVector evolve_walk(const StateVector& state, const WalkGenerator& gen, double tau,
                        PropagatorKind kind = PropagatorKind::automatic);
StateVector apply_phasor(const StateVector& state, const PhasorDiagonal& phasor, double gamma);

/// [prod_q U_W(tau_q) U_C(gamma_q)] U_W(tau0) |0...0>, layers applied in order.
StateVector run_ansatz(const AnsatzSchedule& schedule, const WalkGenerator& gen,
                       const PhasorDiagonal& phasor,
                       PropagatorKind kind = PropagatorKind::automatic);

/// Population of a set of basis indices. Throws empty-target.
double success_probability(const StateVector& state, std::span<const std::size_t> target);
/// |<target|state>|^2 for a coherent target given in the same basis.
double overlap_probability(const StateVector& state, const Eigen::VectorXcd& target);

}  // namespace qwalk
