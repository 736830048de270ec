#include "qwalk/symmetric.hpp"

#include <cmath>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

Eigen::MatrixXd reduced_generator(const SubspaceBasis& basis,
                                  const std::vector<DihedralOrbit>& orbits,
                                  const std::vector<std::size_t>& orbit_of_state) {
  const auto d = static_cast<Eigen::Index>(orbits.size());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d, d);
  for (auto [a, b] : walk_edges(basis)) {
    const auto oa = static_cast<Eigen::Index>(orbit_of_state[a]);
    const auto ob = static_cast<Eigen::Index>(orbit_of_state[b]);
    g(oa, ob) += 1.0;
    g(ob, oa) += 1.0;
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      g(i, j) /= std::sqrt(static_cast<double>(orbits[static_cast<std::size_t>(i)].size() *
                                               orbits[static_cast<std::size_t>(j)].size()));
    }
  }
  return g;
}

}  // namespace

BraceletSector::BraceletSector(BasisPtr basis)
    : basis_(std::move(basis)),
      orbits_(orbit_partition(*basis_)),
      orbit_of_state_(basis_->size()),
      spectrum_(Eigen::MatrixXd::Zero(0, 0)) {
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    for (std::size_t idx : orbit_indices(orbits_[k], *basis_)) orbit_of_state_[idx] = k;
  }
  generator_ = reduced_generator(*basis_, orbits_, orbit_of_state_);
  weights_.resize(static_cast<Eigen::Index>(orbits_.size()));
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    weights_[static_cast<Eigen::Index>(k)] = orbits_[k].hamming_weight();
  }
  spectrum_ = DenseSpectrum(generator_);
}

std::optional<std::size_t> BraceletSector::orbit_index(Bitstring z) const {
  auto idx = basis_->index_of(z);
  if (!idx) return std::nullopt;
  return orbit_of_state_[*idx];
}

Eigen::VectorXcd BraceletSector::lift(const Eigen::VectorXcd& reduced) const {
  if (static_cast<std::size_t>(reduced.size()) != orbits_.size()) {
    throw Error(ErrorKind::inconsistent_basis, "reduced state dimension does not match sector");
  }
  Eigen::VectorXcd full(static_cast<Eigen::Index>(basis_->size()));
  for (std::size_t a = 0; a < basis_->size(); ++a) {
    const std::size_t k = orbit_of_state_[a];
    full[static_cast<Eigen::Index>(a)] =
        reduced[static_cast<Eigen::Index>(k)] / std::sqrt(static_cast<double>(orbits_[k].size()));
  }
  return full;
}

Eigen::VectorXcd BraceletSector::project(const Eigen::VectorXcd& full) const {
  if (static_cast<std::size_t>(full.size()) != basis_->size()) {
    throw Error(ErrorKind::inconsistent_basis, "state dimension does not match basis");
  }
  Eigen::VectorXcd reduced = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(orbits_.size()));
  for (std::size_t a = 0; a < basis_->size(); ++a) {
    const std::size_t k = orbit_of_state_[a];
    reduced[static_cast<Eigen::Index>(k)] +=
        full[static_cast<Eigen::Index>(a)] / std::sqrt(static_cast<double>(orbits_[k].size()));
  }
  return reduced;
}

}  // namespace qwalk
