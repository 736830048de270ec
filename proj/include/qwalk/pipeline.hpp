#pragma once

// Config-driven experiment: for every ring size, target and depth, prepare
// on the CTQW backend, optionally emulate the compiled program, sample noisy
// shots and mitigate them, then fit amplification scaling.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/analysis.hpp"
#include "qwalk/io.hpp"

namespace qwalk {

struct InstanceResult {
  int n = 0;
  std::size_t subspace_size = 0;
  std::string target;      // printed bitstring (representative for bracelets)
  std::string target_name; // as given in the config
  std::size_t target_cardinality = 1;  // orbit size for bracelet populations
  int p = 0;
  double tau0 = 0.0;       // product: tau0; bracelet: tau per segment
  double tau1 = 0.0;       // product: tau1; bracelet: tau_eff
  std::vector<double> gamma;
  double perfect = 0.0;
  std::optional<double> emulation;
  std::optional<double> naive;
  std::optional<ConfidenceInterval> em;
  std::string error;       // non-empty when the instance failed
  double seconds = 0.0;
};

struct FitRecord {
  std::string target;
  int p = 0;
  std::string backend;
  std::vector<double> subspace_size;
  std::vector<double> amplification;
  std::optional<PowerLawFit> fit;
  std::string error;
};

struct ExperimentResult {
  std::vector<InstanceResult> instances;  // config order
  std::vector<FitRecord> fits;
  double seconds = 0.0;
};

/// Runs every instance; failures are recorded per instance and do not stop
/// the others. Deterministic for a fixed config regardless of workers.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Writes results.csv, fig4_<target>_p<p>_<backend>.csv, fits.json and
/// manifest.json into `dir`. Everything except manifest.json is a pure
/// function of the config.
void write_experiment(const std::filesystem::path& dir, const ExperimentConfig& config,
                      const ExperimentResult& result);

}  // namespace qwalk
