#pragma once

// Amplification, power-law scaling fits, Grover reference curves and
// coherent/incoherent quench traces.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/ctqw.hpp"
#include "qwalk/emulator.hpp"

namespace qwalk {

struct AmplificationPoint {
  double subspace_size = 0.0;
  double success = 0.0;
  double target_cardinality = 1.0;
  double amplification = 0.0;  // |V| P / |z*|
};

AmplificationPoint amplification(double subspace_size, double success, double target_cardinality = 1.0);

enum class FitWeighting {
  relative,  // sigma_i proportional to A_i (equal relative errors)
  unit,
  explicit_sigma,
};

struct PowerLawFit {
  double c = 0.0;
  double alpha = 0.0;
  double c_error = 0.0;      // 95% half-widths, 1.96 standard errors
  double alpha_error = 0.0;
  double alpha_low = 0.0;
  double alpha_high = 0.0;
  double r_squared = 0.0;
  double speedup = 0.0;       // n = 1/(1 - alpha)
  double speedup_low = 0.0;
  std::optional<double> speedup_high;  // empty when alpha_high reaches 1 ("n >= speedup_low")
  bool alpha_at_bound = false;
  int iterations = 0;

  std::string speedup_text() const;
};

/// Weighted nonlinear least squares of A = c |V|^alpha under alpha < 1
/// (Levenberg-Marquardt). `sigma` is used with FitWeighting::explicit_sigma;
/// the covariance is scaled by the reduced chi-square. Throws invalid-argument
/// with fewer than 3 points and singular-fit when the normal matrix is singular.
PowerLawFit fit_power_law(std::span<const double> subspace_size, std::span<const double> amplification,
                          FitWeighting weighting = FitWeighting::relative,
                          std::span<const double> sigma = {});

/// Standard deviation implied by a 95% interval, (high - low) / (2 * 1.96).
double sigma_from_ci(double low, double high);

/// sin^2((2p+1) arcsin(1/sqrt(|V|))): p Grover iterations with one marked item.
double grover_reference(double subspace_size, int p);

enum class QuenchMode { coherent, incoherent };

struct QuenchTrace {
  std::vector<double> tau;
  std::vector<double> orbit_population;           // sum over orbit members of |<u|psi>|^2
  std::vector<double> representative_population;  // |<z|psi>|^2
};

/// Free walk after preparing the bracelet state of `orbit` (coherent) or the
/// uniform mixture of its members (incoherent, one evolution per member,
/// probabilities averaged).
QuenchTrace quench(const DihedralOrbit& orbit, const WalkGenerator& gen, std::span<const double> tau_grid,
                   QuenchMode mode);

/// Same traces from explicit prepared states: a single state (coherent) or
/// members averaged with equal weight (incoherent).
QuenchTrace quench_states(std::span<const StateVector> members, const DihedralOrbit& orbit,
                          const WalkGenerator& gen, std::span<const double> tau_grid);

/// Rydberg backend: each prepared full-space state is followed by one extra
/// walk pulse of length tau, compiled with `options`; traces are averaged over
/// the given states (one state: coherent, orbit members: incoherent).
QuenchTrace quench_rydberg(std::span<const Eigen::VectorXcd> prepared, const DihedralOrbit& orbit,
                           std::span<const double> tau_grid, const CompileOptions& options = {},
                           const EmulatorOptions& emulator = {});

/// Populations of the orbit under exact density-matrix evolution of
/// rho (dense propagator, for small subspaces).
QuenchTrace quench_density_matrix(const Eigen::MatrixXcd& rho, const DihedralOrbit& orbit,
                                  const WalkGenerator& gen, std::span<const double> tau_grid);

/// Writes "tau,orbit_population,representative_population" rows.
void write_trace_csv(std::ostream& out, const QuenchTrace& trace);

}  // namespace qwalk
