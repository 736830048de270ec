#pragma once

// Derivative-free local minimizers.

#include <functional>
#include <span>
#include <vector>

namespace qwalk {

using Objective = std::function<double(std::span<const double>)>;

struct OptimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct NelderMeadOptions {
  double initial_step = 0.05;  // simplex edge along each coordinate
  double xtol = 1e-6;          // stop when simplex diameter drops below this
  int max_evaluations = 500;
};

OptimizeResult nelder_mead(const Objective& f, std::vector<double> x0,
                           const NelderMeadOptions& options = {});

struct TrustRegionOptions {
  double initial_radius = 0.5;
  double final_radius = 1e-6;
  double lower = -1e300;  // box bounds applied to every coordinate
  double upper = 1e300;
  int max_evaluations = 20000;
};

/// COBYLA-style minimizer for box bounds: a linear interpolation model on a
/// simplex of n+1 points, steepest-descent trial steps of length rho, trial
/// points always entering the simplex, and geometry steps orthogonal to the
/// opposite face whenever a vertex is too far (> 2.1 rho) or the simplex too
/// flat (< 0.25 rho). rho is halved after unproductive steps.
OptimizeResult linear_trust_region(const Objective& f, std::vector<double> x0,
                                   const TrustRegionOptions& options = {});

}  // namespace qwalk
