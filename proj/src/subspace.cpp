#include "qwalk/subspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qwalk/error.hpp"

namespace qwalk {

std::string format_bits(Bitstring z, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((z >> i) & 1U) out[static_cast<std::size_t>(n - 1 - i)] = '1';
  }
  return out;
}

Bitstring parse_bits(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw Error(ErrorKind::invalid_argument, "bitstring length must be in 1.." +
                                                 std::to_string(kMaxVertices));
  }
  Bitstring z = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::invalid_argument, "bitstring may only contain 0/1: '" +
                                                   std::string(text) + "'");
    }
    z = (z << 1) | static_cast<Bitstring>(c == '1');
  }
  return z;
}

int hamming_weight(Bitstring z) noexcept { return std::popcount(z); }

int hamming_distance(Bitstring a, Bitstring b) noexcept { return std::popcount(a ^ b); }

ConstraintGraph::ConstraintGraph(int n_vertices, std::vector<Edge> edges) : n_(n_vertices) {
  if (n_ < 1 || n_ > kMaxVertices) {
    throw Error(ErrorKind::invalid_argument,
                "vertex count must be in 1.." + std::to_string(kMaxVertices));
  }
  for (auto& [i, j] : edges) {
    if (i == j) throw Error(ErrorKind::invalid_argument, "self-loop on vertex " + std::to_string(i));
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
      throw Error(ErrorKind::invalid_argument, "edge (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ") out of range");
    }
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  neighbors_.assign(static_cast<std::size_t>(n_), 0);
  for (auto [i, j] : edges_) {
    neighbors_[static_cast<std::size_t>(i)] |= Bitstring{1} << j;
    neighbors_[static_cast<std::size_t>(j)] |= Bitstring{1} << i;
  }
}

bool ConstraintGraph::is_independent(Bitstring z) const noexcept {
  for (auto [i, j] : edges_) {
    if (((z >> i) & 1U) && ((z >> j) & 1U)) return false;
  }
  return true;
}

int ConstraintGraph::degree(int v) const noexcept {
  return std::popcount(neighbors_[static_cast<std::size_t>(v)]);
}

ConstraintGraph ring_graph(int n) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "ring needs n >= 3, got " + std::to_string(n));
  std::vector<ConstraintGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return ConstraintGraph(n, std::move(edges));
}

ConstraintGraph null_graph(int n) { return ConstraintGraph(n, {}); }

SubspaceBasis::SubspaceBasis(ConstraintGraph constraint, std::vector<Bitstring> states)
    : constraint_(std::move(constraint)), states_(std::move(states)) {
  if (!std::is_sorted(states_.begin(), states_.end()) ||
      std::adjacent_find(states_.begin(), states_.end()) != states_.end()) {
    throw Error(ErrorKind::invalid_argument, "basis states must be strictly ascending");
  }
}

std::optional<std::size_t> SubspaceBasis::index_of(Bitstring z) const noexcept {
  auto it = std::lower_bound(states_.begin(), states_.end(), z);
  if (it == states_.end() || *it != z) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

namespace {

void extend(const ConstraintGraph& g, int v, Bitstring current, Bitstring forbidden,
            std::vector<Bitstring>& out) {
  if (v == g.n_vertices()) {
    out.push_back(current);
    return;
  }
  extend(g, v + 1, current, forbidden, out);
  const Bitstring bit = Bitstring{1} << v;
  if (!(forbidden & bit)) {
    extend(g, v + 1, current | bit, forbidden | g.neighbor_mask(v), out);
  }
}

}  // namespace

SubspaceBasis enumerate_subspace(const ConstraintGraph& g) {
  std::vector<Bitstring> states;
  extend(g, 0, 0, 0, states);
  std::sort(states.begin(), states.end());
  return SubspaceBasis(g, std::move(states));
}

std::vector<std::pair<std::size_t, std::size_t>> walk_edges(const SubspaceBasis& basis) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto& g = basis.constraint();
  const auto states = basis.states();
  for (std::size_t a = 0; a < states.size(); ++a) {
    const Bitstring z = states[a];
    for (int v = 0; v < g.n_vertices(); ++v) {
      const Bitstring bit = Bitstring{1} << v;
      if ((z & bit) || (z & g.neighbor_mask(v))) continue;
      // z | bit > z, so its index is larger than a
      edges.emplace_back(a, *basis.index_of(z | bit));
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool DihedralOrbit::contains(Bitstring z) const {
  return std::binary_search(members.begin(), members.end(), z);
}

Bitstring rotate_bits(Bitstring z, int n, int shift) {
  shift = ((shift % n) + n) % n;
  if (shift == 0) return z;
  const Bitstring mask = (n == 64) ? ~Bitstring{0} : ((Bitstring{1} << n) - 1);
  return ((z << shift) | (z >> (n - shift))) & mask;
}

Bitstring reflect_bits(Bitstring z, int n) {
  Bitstring out = 0;
  for (int i = 0; i < n; ++i) {
    if ((z >> i) & 1U) out |= Bitstring{1} << (n - 1 - i);
  }
  return out;
}

DihedralOrbit dihedral_orbit(Bitstring z, int n) {
  if (n < 1 || n > kMaxVertices) throw Error(ErrorKind::invalid_argument, "bad ring size");
  if (n < 64 && (z >> n) != 0) {
    throw Error(ErrorKind::invalid_argument, "bitstring longer than ring size");
  }
  DihedralOrbit orbit;
  orbit.n_vertices = n;
  const Bitstring mirrored = reflect_bits(z, n);
  orbit.members.reserve(2 * static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    orbit.members.push_back(rotate_bits(z, n, s));
    orbit.members.push_back(rotate_bits(mirrored, n, s));
  }
  std::sort(orbit.members.begin(), orbit.members.end());
  orbit.members.erase(std::unique(orbit.members.begin(), orbit.members.end()), orbit.members.end());
  orbit.representative = orbit.members.front();
  return orbit;
}

std::vector<DihedralOrbit> orbit_partition(const SubspaceBasis& basis) {
  const int n = basis.n_vertices();
  std::vector<bool> seen(basis.size(), false);
  std::vector<DihedralOrbit> orbits;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (seen[k]) continue;
    DihedralOrbit orbit = dihedral_orbit(basis.state(k), n);
    for (Bitstring u : orbit.members) {
      auto idx = basis.index_of(u);
      if (!idx) {
        throw Error(ErrorKind::inconsistent_target,
                    "basis is not closed under ring symmetries (" + format_bits(u, n) + ")");
      }
      seen[*idx] = true;
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<std::size_t> orbit_indices(const DihedralOrbit& orbit, const SubspaceBasis& basis) {
  std::vector<std::size_t> indices;
  indices.reserve(orbit.size());
  for (Bitstring u : orbit.members) {
    auto idx = basis.index_of(u);
    if (!idx) {
      throw Error(ErrorKind::inconsistent_target,
                  "orbit member " + format_bits(u, orbit.n_vertices) + " is not in the subspace");
    }
    indices.push_back(*idx);
  }
  return indices;
}

Eigen::VectorXcd bracelet_vector(const DihedralOrbit& orbit, const SubspaceBasis& basis) {
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
  const double weight = 1.0 / std::sqrt(static_cast<double>(orbit.size()));
  for (std::size_t idx : orbit_indices(orbit, basis)) {
    amplitudes[static_cast<Eigen::Index>(idx)] = weight;
  }
  return amplitudes;
}

}  // namespace qwalk
