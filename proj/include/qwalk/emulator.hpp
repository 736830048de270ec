#pragma once

// Dense full-space emulation of the time-dependent Rydberg Hamiltonian
//   H(t) = Omega/2 sum_i (e^{i phi} |g><r|_i + h.c.) - sum_i (Delta + w_i delta) n_i
//          + sum_{i<j} C6 / r_ij^6 n_i n_j
// with the midpoint exponential integrator: each step applies
// exp(-i h H(t + h/2)) through Lanczos. Steps never straddle a breakpoint of
// any channel, so phase jumps are exact.

#include <Eigen/Dense>

#include "qwalk/ctqw.hpp"
#include "qwalk/rydberg.hpp"

namespace qwalk {

inline constexpr int kMaxEmulatedAtoms = 14;

struct EmulatorOptions {
  double max_step = 1e-3;       // us
  bool richardson = false;      // repeat at half step and compare
  double tolerance = 1e-6;      // allowed ||psi_h - psi_{h/2}|| when richardson is on
};

struct EmulationResult {
  int n = 0;
  Eigen::VectorXcd state;   // 2^n amplitudes, bit i of the index is atom i
  int steps = 0;
  double richardson_error = 0.0;  // 0 unless richardson was requested
};

/// Starts from all atoms in |g>. Throws invalid-argument above
/// kMaxEmulatedAtoms and integration-failure if the Richardson check fails.
EmulationResult emulate(const RydbergProgram& program, const EmulatorOptions& options = {});

/// Same integration from an arbitrary full-space initial state.
EmulationResult emulate_from(const RydbergProgram& program, const Eigen::VectorXcd& initial,
                             const EmulatorOptions& options = {});

/// Amplitudes on the blockade subspace in basis order.
Eigen::VectorXcd project_to_subspace(const Eigen::VectorXcd& full, const SubspaceBasis& basis);

/// Embeds subspace amplitudes in the 2^n space.
Eigen::VectorXcd embed_in_full_space(const Eigen::VectorXcd& sub, const SubspaceBasis& basis);

/// Population outside the blockade subspace.
double leakage(const Eigen::VectorXcd& full, const SubspaceBasis& basis);

/// |<psi_walk | e^{i phi_end n} psi_ryd>|^2, removing the final Rabi-phase frame.
double walk_fidelity(const EmulationResult& result, const RydbergProgram& program,
                     const StateVector& walk_state);

/// Probability of a computational basis state.
double basis_probability(const EmulationResult& result, Bitstring z);

}  // namespace qwalk
