#pragma once

// Bracelet-state preparation: scan the bare walk for population peaks, fix
// the walk times from a peak, and optimize the global Hamming phases.
//
// Layer convention: a plan of depth p has p phases and p + 1 walk segments of
// length tau (fiducial walk, then p x (phase, walk)), so the accumulated walk
// time is tau_eff = (p + 1) tau = tau_tot.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qwalk/optimize.hpp"
#include "qwalk/symmetric.hpp"

namespace qwalk {

struct Peak {
  double tau = 0.0;
  double population = 0.0;
};

struct PeakScan {
  double dtau = 0.0;
  double threshold = 0.0;  // 1 / (2N)
  std::vector<double> tau_grid;
  std::vector<double> populations;
  std::vector<Peak> peaks;  // strict interior maxima above threshold, ascending in tau
};

/// Orbit population of the walk from |0> at tau_j = j dtau, 0 < tau_j <= tau_max.
PeakScan peak_scan(const BraceletSector& sector, Bitstring representative, double tau_max,
                   double dtau = 0.02);

struct BraceletPlan {
  double tau_tot = 0.0;
  int p = 0;
  double tau = 0.0;
  std::vector<double> gamma;
  double success = 0.0;
  bool converged = false;
  int evaluations = 0;

  double tau_eff() const noexcept { return tau * (p + 1); }
};

/// p = floor(tau_tot / tau_min_hw) - 2, tau = tau_tot / (p + 1), gamma = 0.
/// Throws plan-infeasible when p <= 1.
BraceletPlan plan_from_peak(double tau_tot, double tau_min_hw = 0.4);

/// Plan with explicit depth and accumulated walk time (tabulated plans).
BraceletPlan plan_from_table(double tau_eff, std::span<const double> gamma);

AnsatzSchedule bracelet_schedule(const BraceletPlan& plan);

/// Reduced-space state after the plan's protocol, starting from |0>.
Eigen::VectorXcd bracelet_evolve(const BraceletSector& sector, double tau,
                                 std::span<const double> gamma);

/// |<[z*]|psi>|^2 for the plan's walk times and phases.
double bracelet_success(const BraceletSector& sector, Bitstring representative,
                        double tau, std::span<const double> gamma);

/// Extra success estimate for the joint objective, e.g. the Rydberg emulation
/// of the same plan. The objective then becomes (P_ctqw + P_extra) / 2.
using PlanEvaluator = std::function<double(const BraceletPlan&)>;

struct BraceletOptions {
  double tau_max = 30.0;
  double dtau = 0.02;
  double tau_min_hw = 0.4;
  double gamma_bound = 3.141592653589793;
  double initial_radius = 0.5;
  double final_radius = 1e-6;
  int max_evaluations = 20000;
  PlanEvaluator joint;  // empty: CTQW objective only
};

/// Optimize the phases of a fixed plan, starting from the plan's gamma.
BraceletPlan optimize_plan(const BraceletSector& sector, Bitstring representative,
                           BraceletPlan plan, const BraceletOptions& options = {});

struct BraceletSearch {
  PeakScan scan;
  std::vector<BraceletPlan> tried;  // one per peak visited, in scan order
  std::optional<BraceletPlan> best;
};

/// Full protocol: skip the first peak, optimize from each later peak and stop
/// at the first decrease in success or when the peaks run out. Infeasible
/// peaks (p <= 1) are skipped.
BraceletSearch optimize_bracelet(const BraceletSector& sector, Bitstring representative,
                                 const BraceletOptions& options = {});

struct SpectralProfile {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;   // columns over the bracelet basis
  Eigen::VectorXd target_weights; // u_r
  int target_weight = 0;          // Hamming weight of the target sector
  double kappa = 0.0;
  double tau_eff = 0.0;
  std::optional<double> delta_min;  // empty when no supported gap reaches kappa / tau_eff
};

/// u_r = sum over orbits of weight h* of |<[z]|r>|^2. Pairs count only if both
/// weights exceed weight_threshold * max(u).
SpectralProfile spectral_profile(const BraceletSector& sector, Bitstring representative,
                                 double kappa, double tau_eff, double weight_threshold = 1e-8);

/// Delta_min(kappa) for an existing profile, without recomputing eigenpairs.
std::optional<double> resolvable_minimum(const SpectralProfile& profile, double kappa,
                                         double tau_eff, double weight_threshold = 1e-8);

struct KappaInstance {
  SpectralProfile profile;  // kappa and delta_min are ignored
  double tau_eff = 0.0;
};

struct KappaCalibration {
  std::vector<double> kappa_grid;
  std::vector<double> correlation;  // Pearson r of tau_eff vs 1/Delta_min per kappa
  double kappa_star = 0.0;
  double window_low = 0.0;
  double window_high = 0.0;
};

/// Slides a window of `window` grid points over r(kappa) and returns the
/// centre of the window maximizing mean(r) - 2 std(r). Needs >= 10 instances.
KappaCalibration calibrate_kappa(std::span<const KappaInstance> instances,
                                 std::span<const double> kappa_grid, int window = 9);

}  // namespace qwalk
