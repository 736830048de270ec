#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

enum class ErrorKind {
  invalid_argument,
  inconsistent_basis,
  inconsistent_target,
  empty_target,
  seed_undefined,
  plan_infeasible,
  degenerate_geometry,
  integration_failure,
  too_few_instances,
  singular_fit,
  validation,
};

const char* to_string(ErrorKind kind) noexcept;

/// Library-wide exception. The kind lets callers (the CLI in particular)
/// map failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::inconsistent_basis: return "inconsistent-basis";
    case ErrorKind::inconsistent_target: return "inconsistent-target";
    case ErrorKind::empty_target: return "empty-target";
    case ErrorKind::seed_undefined: return "seed-undefined";
    case ErrorKind::plan_infeasible: return "plan-infeasible";
    case ErrorKind::degenerate_geometry: return "degenerate-geometry";
    case ErrorKind::integration_failure: return "integration-failure";
    case ErrorKind::too_few_instances: return "too-few-instances";
    case ErrorKind::singular_fit: return "singular-fit";
    case ErrorKind::validation: return "validation";
  }
  return "unknown";
}

}  // namespace qwalk
