#pragma once

// Readout channel, shot records and the text shot-file format:
//   # n=7 shots=1000 p00=0.99 p11=0.93 seed=42
//   0000101
//   ...
// Bitstrings are printed most significant vertex first, as everywhere else.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/subspace.hpp"

namespace qwalk {

/// Independent asymmetric bit flips: p00 = P(read 0 | 0), p11 = P(read 1 | 1).
struct ReadoutChannel {
  double p00 = 0.99;
  double p11 = 0.93;

  static ReadoutChannel standard() { return {0.99, 0.93}; }
  static ReadoutChannel local_detuning() { return {0.90, 0.93}; }
  static ReadoutChannel perfect() { return {1.0, 1.0}; }

  /// P(read `observed` | true `actual`) for one bit.
  double transition(int actual, int observed) const;
  void validate() const;
};

/// K(z | s) = prod_j P(z_j | s_j) over n bits.
double channel_likelihood(Bitstring observed, Bitstring actual, int n, const ReadoutChannel& channel);

struct ShotSet {
  int n = 0;
  std::vector<Bitstring> shots;
  ReadoutChannel channel;  // channel the shots were recorded through
  std::uint64_t seed = 0;
};

/// Draws `shots` samples from `probabilities` (indexed by `states`), then
/// flips each bit through the channel. Deterministic under `seed`.
ShotSet sample_shots(std::span<const Bitstring> states, std::span<const double> probabilities, int n,
                     int shots, const ReadoutChannel& channel, std::uint64_t seed);

/// Samples from |amplitude|^2 of a 2^n full-space state.
ShotSet sample_shots(const Eigen::VectorXcd& full_state, int n, int shots,
                     const ReadoutChannel& channel, std::uint64_t seed);

void write_shots(std::ostream& out, const ShotSet& set);
/// Throws validation with a line number on malformed input.
ShotSet read_shots(std::istream& in);

}  // namespace qwalk
