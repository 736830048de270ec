#pragma once

// Independent-set subspaces of a constraint graph, the Hamming-distance-1
// walk graph over them, and dihedral orbits of ring configurations.
//
// Bitstring convention: bit i of the integer labels physical vertex i.
// Printed strings run from bit n-1 (leftmost) down to bit 0, so "00101"
// is the integer 5 with vertices 0 and 2 occupied.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

using Bitstring = std::uint64_t;
inline constexpr int kMaxVertices = 63;

std::string format_bits(Bitstring z, int n);
/// Parses a printed bitstring ('0'/'1' only, at most kMaxVertices chars).
Bitstring parse_bits(std::string_view text);
int hamming_weight(Bitstring z) noexcept;
int hamming_distance(Bitstring a, Bitstring b) noexcept;

class ConstraintGraph {
 public:
  using Edge = std::pair<int, int>;

  /// Edges are normalized to (min, max), deduplicated and sorted.
  /// Throws invalid-argument on self-loops or out-of-range vertices.
  ConstraintGraph(int n_vertices, std::vector<Edge> edges);

  int n_vertices() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Bitstring neighbor_mask(int v) const { return neighbors_.at(static_cast<std::size_t>(v)); }
  bool is_independent(Bitstring z) const noexcept;
  int degree(int v) const noexcept;

  friend bool operator==(const ConstraintGraph&, const ConstraintGraph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Bitstring> neighbors_;
};

ConstraintGraph ring_graph(int n);
ConstraintGraph null_graph(int n);

/// Ordered independent-set configurations of a constraint graph, ascending by
/// integer value. Immutable once built.
class SubspaceBasis {
 public:
  SubspaceBasis(ConstraintGraph constraint, std::vector<Bitstring> states);

  const ConstraintGraph& constraint() const noexcept { return constraint_; }
  int n_vertices() const noexcept { return constraint_.n_vertices(); }
  std::size_t size() const noexcept { return states_.size(); }
  std::span<const Bitstring> states() const noexcept { return states_; }
  Bitstring state(std::size_t k) const { return states_.at(k); }
  std::optional<std::size_t> index_of(Bitstring z) const noexcept;
  bool contains(Bitstring z) const noexcept { return index_of(z).has_value(); }

 private:
  ConstraintGraph constraint_;
  std::vector<Bitstring> states_;
};

/// Depth-first extension with neighbour masks; never touches the 2^n strings
/// that violate the constraint.
SubspaceBasis enumerate_subspace(const ConstraintGraph& g);

/// Index pairs (a < b) whose states differ in exactly one bit, sorted.
std::vector<std::pair<std::size_t, std::size_t>> walk_edges(const SubspaceBasis& basis);

struct DihedralOrbit {
  Bitstring representative = 0;   // smallest member (= lexicographically minimal string)
  std::vector<Bitstring> members; // ascending
  int n_vertices = 0;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Bitstring z) const;
  int hamming_weight() const noexcept { return qwalk::hamming_weight(representative); }
};

Bitstring rotate_bits(Bitstring z, int n, int shift);
Bitstring reflect_bits(Bitstring z, int n);

/// Orbit of z under the 2n elements of D_n acting on ring positions.
DihedralOrbit dihedral_orbit(Bitstring z, int n);

/// All dihedral orbits of a ring subspace, ordered by representative.
/// The orbits partition the basis.
std::vector<DihedralOrbit> orbit_partition(const SubspaceBasis& basis);

/// Equal-weight superposition over the orbit, expressed in `basis` coordinates.
/// Throws inconsistent-target if an orbit member lies outside the basis.
Eigen::VectorXcd bracelet_vector(const DihedralOrbit& orbit, const SubspaceBasis& basis);

/// Basis indices of all orbit members (same error contract as bracelet_vector).
std::vector<std::size_t> orbit_indices(const DihedralOrbit& orbit, const SubspaceBasis& basis);

}  // namespace qwalk
