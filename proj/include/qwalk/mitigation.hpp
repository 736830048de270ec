#pragma once

// Readout-error mitigation by expectation maximization over the blockade
// subspace plus an independent-Bernoulli background on its complement.
//
// Model probability of observing z:
//   m(z) = sum_k phi_k K(z | s_k) + pi_perp L_perp(z) / Z_perp
// with L_perp(z) = sum_{s not in V} K(z | s) P_out(s), Z_perp = sum_{s not in V} P_out(s)
// and pi_perp = 1 - sum_k phi_k, so m is a proper distribution. phi_V and
// pi_perp take the exact M-step (average responsibilities). phi_perp takes the
// Beta-regularized channel-inversion update, accepted only if the objective
// does not drop below its value at the start of the iteration (halved
// towards the old value otherwise), which keeps every iteration monotone.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/shots.hpp"
#include "qwalk/subspace.hpp"

namespace qwalk {

struct EMOptions {
  double alpha = 1.0;  // Beta prior pseudo-counts on each phi_perp
  double beta = 1.0;
  double epsilon = 1e-8;
  int max_iterations = 100000;
};

struct EMModel {
  std::vector<double> phi_v;     // basis order
  std::vector<double> phi_perp;  // per bit
  double pi_perp = 0.0;          // out-of-subspace mass, 1 - sum(phi_v)
  std::vector<double> log_likelihood;  // objective at the start and after every iteration
  int iterations = 0;
  bool converged = false;
};

/// sum over s outside the subspace of K(z | s) P_out(s; phi_perp), evaluated as the
/// per-bit factorized full-space sum minus the in-subspace terms.
double background_likelihood(Bitstring z, std::span<const double> phi_perp, const SubspaceBasis& basis,
                             const ReadoutChannel& channel);

/// Same quantity by enumerating all 2^n strings (test oracle, n <= 20).
double background_likelihood_bruteforce(Bitstring z, std::span<const double> phi_perp,
                                        const SubspaceBasis& basis, const ReadoutChannel& channel);

/// Observed strings with multiplicities and the channel likelihood table
/// against every subspace state. Shared by the full fit and all bootstrap
/// resamples, which only change the multiplicities.
class EMProblem {
 public:
  EMProblem(const ShotSet& shots, const SubspaceBasis& basis, const ReadoutChannel& channel);

  const SubspaceBasis& basis() const noexcept { return *basis_; }
  std::span<const Bitstring> observed() const noexcept { return observed_; }
  std::span<const double> counts() const noexcept { return counts_; }
  /// Index into observed() for each original shot.
  std::span<const std::size_t> shot_index() const noexcept { return shot_index_; }

  EMModel solve(const EMOptions& options = {}, const EMModel* warm_start = nullptr) const;
  EMModel solve(std::span<const double> counts, const EMOptions& options,
                const EMModel* warm_start) const;

  /// Objective (observed log-likelihood plus log Beta prior) of a model.
  double objective(std::span<const double> counts, const EMModel& model, const EMOptions& options) const;

 private:
  void background(std::span<const double> phi_perp, Eigen::VectorXd& l_perp, double& z_perp) const;
  double mixture(const Eigen::VectorXd& counts, const Eigen::VectorXd& phi, double pi,
                 const Eigen::VectorXd& l_perp, double z_perp, Eigen::VectorXd& mu) const;

  const SubspaceBasis* basis_;
  ReadoutChannel channel_;
  int n_ = 0;
  std::vector<Bitstring> observed_;
  std::vector<double> counts_;
  std::vector<std::size_t> shot_index_;
  Eigen::MatrixXd table_;  // K(observed_u | s_k)
};

EMModel em_reconstruct(const ShotSet& shots, const SubspaceBasis& basis, const ReadoutChannel& channel,
                       const EMOptions& options = {});

struct ConfidenceInterval {
  double low = 0.0;
  double point = 0.0;
  double high = 0.0;
};

struct BootstrapOptions {
  int resamples = 1000;
  double level = 0.95;
  std::uint64_t seed = 0;
  int workers = 1;
  EMOptions em;
};

/// Percentile interval of sum_{k in target} phi_k over with-replacement
/// resamples of the shots, each fit warm-started from the full-data model.
/// The point estimate is the full-data fit; the interval is widened to contain
/// it if needed. Deterministic under the seed for any worker count.
ConfidenceInterval bootstrap_ci(const EMProblem& problem, const EMModel& full_fit,
                                std::span<const std::size_t> target, const BootstrapOptions& options = {});

struct ReconstructionResult {
  EMModel model;
  std::vector<std::size_t> target;
  ConfidenceInterval target_probability;
  double out_of_subspace_mass = 0.0;
};

ReconstructionResult reconstruct(const ShotSet& shots, const SubspaceBasis& basis,
                                 const ReadoutChannel& channel, std::span<const std::size_t> target,
                                 const BootstrapOptions& options = {});

}  // namespace qwalk
