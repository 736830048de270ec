#pragma once

// File formats: schedule, program and reconstruction JSON, experiment
// configuration, and the FNV-1a digest used in run manifests. Every JSON
// document carries a "schema" field with a version suffix.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qwalk/mitigation.hpp"
#include "qwalk/rydberg.hpp"

namespace qwalk {

using Json = nlohmann::ordered_json;

inline constexpr const char* kScheduleSchema = "qwalk.schedule/1";
inline constexpr const char* kProgramSchema = "qwalk.program/1";
inline constexpr const char* kReconstructionSchema = "qwalk.reconstruction/1";
inline constexpr const char* kConfigSchema = "qwalk.config/1";
inline constexpr const char* kManifestSchema = "qwalk.manifest/1";

std::uint64_t fnv1a(std::string_view bytes) noexcept;
std::string hex64(std::uint64_t value);

/// "half": 0^{N-2h}(01)^h with h = floor(N/4) + 1; "mis": h = floor(N/2);
/// anything else is parsed as a bitstring of length n.
Bitstring named_target(std::string_view name, int n);

Json schedule_to_json(const AnsatzSchedule& schedule, int n);
/// Throws validation with the offending field.
AnsatzSchedule schedule_from_json(const Json& doc, int& n);

/// Positions rounded to the layout quantum; channels as breakpoint lists.
Json program_to_json(const RydbergProgram& program, double quantum = 0.1);

/// {state: probability} over the subspace (entries above `min_probability`),
/// target probability with its interval, out-of-subspace mass and EM status.
Json reconstruction_to_json(const ReconstructionResult& result, const SubspaceBasis& basis,
                            double min_probability = 1e-6);

enum class Family { product, bracelet };
enum class Backend { ctqw, rydberg, shots };

std::string to_string(Family family);
std::string to_string(Backend backend);
Backend parse_backend(std::string_view name);

struct ExperimentConfig {
  std::vector<int> sizes;                        // ring sizes N
  std::vector<std::string> targets{"half"};      // "half", "mis" or bitstrings
  Family family = Family::product;
  std::vector<int> depths{1};                    // product ansatz depths p
  std::vector<Backend> backends{Backend::ctqw};
  ReadoutChannel channel;
  int shots = 1000;
  int resamples = 200;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string output = "out";
  bool use_eta = true;
};

/// Parses and validates a JSON config. Syntax errors report line and column,
/// schema errors the field path; both throw validation.
ExperimentConfig parse_config(std::string_view text);
Json config_to_json(const ExperimentConfig& config);

}  // namespace qwalk
