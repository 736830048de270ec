#pragma once

// Product-state preparation with the fast-forward protocol: gamma = pi on the
// sites left empty by the target, walk times (tau0, tau1) seeded from the chain
// model and refined with Nelder-Mead.
//
// With the phase on the empty sites, U = (-1)^{# occupied empty sites} has
// eigenvalue +1 on both |0> and |z*>, so G+ (mask flips) carries the transfer
// over the accumulated time tau0 + p tau1 while the G- contributions alternate
// in sign between segments.

#include <optional>
#include <vector>

#include <Eigen/Sparse>

#include "qwalk/ctqw.hpp"
#include "qwalk/optimize.hpp"

namespace qwalk {

/// Sites that receive the pi phase: the complement of z_star on n vertices.
Bitstring phase_mask(Bitstring z_star, int n);

/// G = G+ + G-, where G- holds the flips that change the sign of U (flips of
/// empty target sites) and G+ the flips that keep it (flips of target sites).
struct SubspaceSplit {
  Bitstring target = 0;
  Eigen::VectorXd signs;  // eigenvalue of U_{z*}(pi) on each basis state
  Eigen::SparseMatrix<double> plus;
  Eigen::SparseMatrix<double> minus;
};

/// Throws inconsistent-target if z_star is not in the generator's basis.
SubspaceSplit split_generator(const WalkGenerator& gen, Bitstring z_star);

struct ChainModel {
  int k = 0;                      // Hamming weight of the target
  std::vector<double> couplings;  // J_{j,j+1}, j = 0..k-1
  double j0z = 0.0;               // geometric mean coupling |0> -> |z*>
  double beta_plus = 0.0;
  double beta_minus = 0.0;
  double kappa_leak = 0.0;
  double kappa_ret = 0.0;
  double kappa = 1.0;
  bool kappa_fallback = false;    // numerical estimate unusable, kappa = 1
  bool commuting = false;         // [G+, G-] = 0 (unconstrained hypercube)
};

ChainModel chain_parameters(const SubspaceSplit& split);

/// Attenuated coupling J0z cos(phi), cos(phi) = 1/sqrt(1 + (beta- tau0 / beta+)^2).
double effective_coupling(const ChainModel& model, double tau0);

struct ProductSeed {
  double tau0 = 0.0;
  double tau1 = 0.0;
};

/// Closed-form seed. tau0 solves kappa tan(phi) = 1, giving
/// tau0 = 1 / sqrt(kappa^2 beta-^2 - beta+^2); tau1 spreads the remaining
/// effective time over the p walk segments after the fiducial walk, so
/// T_eff = tau0 + p tau1. Throws seed-undefined when the square root is not
/// real, when tau0 exceeds pi/(2 J0z), or when tau1 would be non-positive.
ProductSeed analytic_seed(const ChainModel& model, int p);

/// Seed used when the closed form is undefined: the leakage-balancing tau0 is
/// replaced by the small-angle value 1/(2 beta-), tau1 fills the remaining
/// effective time.
ProductSeed fallback_seed(const ChainModel& model, int p);

/// Schedule tau0, then p x (gamma = pi on phase_mask(z_star), tau1).
AnsatzSchedule product_schedule(Bitstring z_star, int n, int p, double tau0, double tau1);

/// Table convention for the effective coupling: pi / (2 (tau0 + p tau1)).
double table_effective_coupling(int p, double tau0, double tau1);

struct ProductResult {
  Bitstring target = 0;
  int p = 0;
  double tau0 = 0.0;
  double tau1 = 0.0;
  double success = 0.0;
  double t_eff = 0.0;
  double j_eff = 0.0;
  ProductSeed seed;
  bool seed_fallback = false;
  bool split_start = false;  // refined from tau0 = tau1 = T_eff / (p + 1) instead of the seed
  bool converged = false;  // false: best point found within the evaluation budget
  int evaluations = 0;
};

double product_success(const WalkGenerator& gen, Bitstring z_star, int p, double tau0,
                       double tau1, PropagatorKind kind = PropagatorKind::automatic);

ProductResult optimize_product(const WalkGenerator& gen, Bitstring z_star, int p,
                               const NelderMeadOptions& options = {});

}  // namespace qwalk
