#include "qwalk/ctqw.hpp"

#include <cmath>
#include <complex>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

void require_same_basis(const SubspaceBasis& a, const SubspaceBasis& b, const char* what) {
  if (&a != &b && (a.size() != b.size() || a.constraint() != b.constraint())) {
    throw Error(ErrorKind::inconsistent_basis, what);
  }
}

void require_dimension(const StateVector& s, std::size_t dim) {
  if (s.dimension() != dim || !s.basis || s.basis->size() != dim) {
    throw Error(ErrorKind::inconsistent_basis, "state dimension does not match basis");
  }
}

}  // namespace

BasisPtr make_basis(const ConstraintGraph& g) {
  return std::make_shared<const SubspaceBasis>(enumerate_subspace(g));
}

StateVector basis_state(BasisPtr basis, Bitstring z) {
  auto idx = basis->index_of(z);
  if (!idx) {
    throw Error(ErrorKind::inconsistent_target,
                format_bits(z, basis->n_vertices()) + " is not in the subspace");
  }
  StateVector s{basis, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()))};
  s.amplitudes[static_cast<Eigen::Index>(*idx)] = 1.0;
  return s;
}

StateVector zero_state(BasisPtr basis) { return basis_state(std::move(basis), 0); }

WalkGenerator::WalkGenerator(BasisPtr basis)
    : basis_(std::move(basis)), cache_(std::make_shared<Cache>()) {
  const auto edges = walk_edges(*basis_);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * edges.size());
  for (auto [a, b] : edges) {
    triplets.emplace_back(static_cast<int>(a), static_cast<int>(b), 1.0);
    triplets.emplace_back(static_cast<int>(b), static_cast<int>(a), 1.0);
  }
  const auto dim = static_cast<Eigen::Index>(basis_->size());
  matrix_.resize(dim, dim);
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
  matrix_.makeCompressed();
}

void WalkGenerator::apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
  out.noalias() = matrix_ * in;
}

HermitianOp WalkGenerator::as_operator() const {
  return [this](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) { apply(in, out); };
}

const DenseSpectrum& WalkGenerator::spectrum(bool force) const {
  if (!force && dimension() > kDenseLimit && !has_spectrum()) {
    throw Error(ErrorKind::invalid_argument, "dense spectrum requested above size limit");
  }
  std::call_once(cache_->once, [this] {
    cache_->spectrum = std::make_unique<DenseSpectrum>(Eigen::MatrixXd(matrix_));
  });
  return *cache_->spectrum;
}

bool WalkGenerator::has_spectrum() const { return cache_->spectrum != nullptr; }

PhasorDiagonal::PhasorDiagonal(BasisPtr basis, Eigen::VectorXd coefficients)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)) {
  if (static_cast<std::size_t>(coefficients_.size()) != basis_->size()) {
    throw Error(ErrorKind::inconsistent_basis, "phasor coefficient count does not match basis");
  }
}

PhasorDiagonal PhasorDiagonal::site_linear(BasisPtr basis,
                                           std::span<const double> site_coefficients) {
  if (site_coefficients.size() != static_cast<std::size_t>(basis->n_vertices())) {
    throw Error(ErrorKind::invalid_argument, "need one phasor coefficient per site");
  }
  Eigen::VectorXd c(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t a = 0; a < basis->size(); ++a) {
    const Bitstring z = basis->state(a);
    double sum = 0.0;
    for (std::size_t i = 0; i < site_coefficients.size(); ++i) {
      if ((z >> i) & 1U) sum += site_coefficients[i];
    }
    c[static_cast<Eigen::Index>(a)] = sum;
  }
  return PhasorDiagonal(std::move(basis), std::move(c));
}

PhasorDiagonal PhasorDiagonal::local_mask(BasisPtr basis, Bitstring mask) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t a = 0; a < basis->size(); ++a) {
    c[static_cast<Eigen::Index>(a)] = hamming_weight(basis->state(a) & mask);
  }
  return PhasorDiagonal(std::move(basis), std::move(c));
}

PhasorDiagonal PhasorDiagonal::global_hamming(BasisPtr basis) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t a = 0; a < basis->size(); ++a) {
    c[static_cast<Eigen::Index>(a)] = hamming_weight(basis->state(a));
  }
  return PhasorDiagonal(std::move(basis), std::move(c));
}

double AnsatzSchedule::total_walk_time() const {
  double total = tau0;
  for (const auto& layer : layers) total += layer.tau;
  return total;
}

void AnsatzSchedule::validate() const {
  auto bad = [](double x) { return !std::isfinite(x) || x < 0.0; };
  if (bad(tau0)) throw Error(ErrorKind::invalid_argument, "tau0 must be finite and >= 0");
  for (std::size_t q = 0; q < layers.size(); ++q) {
    if (bad(layers[q].tau) || !std::isfinite(layers[q].gamma)) {
      throw Error(ErrorKind::invalid_argument, "layer " + std::to_string(q + 1) +
                                                   " has an invalid walk time or phase");
    }
  }
}

PhasorDiagonal make_phasor(const AnsatzSchedule& schedule, BasisPtr basis) {
  if (schedule.phasor_kind == PhasorKind::local_sites) {
    return PhasorDiagonal::local_mask(std::move(basis), schedule.phase_mask);
  }
  return PhasorDiagonal::global_hamming(std::move(basis));
}

StateVector evolve_walk(const StateVector& state, const WalkGenerator& gen, double tau,
                        PropagatorKind kind) {
  require_dimension(state, gen.dimension());
  require_same_basis(*state.basis, gen.basis(), "state and generator use different bases");
  if (!std::isfinite(tau)) throw Error(ErrorKind::invalid_argument, "non-finite walk time");
  if (tau == 0.0) return state;
  if (kind == PropagatorKind::automatic) {
    kind = (gen.has_spectrum() || gen.dimension() <= WalkGenerator::kDenseLimit)
               ? PropagatorKind::dense
               : PropagatorKind::krylov;
  }
  StateVector out{state.basis, {}};
  if (kind == PropagatorKind::dense) {
    out.amplitudes = gen.spectrum(true).evolve(state.amplitudes, tau);
  } else {
    out.amplitudes = krylov_expv(gen.as_operator(), state.amplitudes, tau);
  }
  return out;
}

StateVector apply_phasor(const StateVector& state, const PhasorDiagonal& phasor, double gamma) {
  require_dimension(state, phasor.basis().size());
  require_same_basis(*state.basis, phasor.basis(), "state and phasor use different bases");
  StateVector out = state;
  if (gamma == 0.0) return out;
  const auto& c = phasor.coefficients();
  for (Eigen::Index a = 0; a < c.size(); ++a) {
    out.amplitudes[a] *= std::exp(std::complex<double>(0.0, -gamma * c[a]));
  }
  return out;
}

StateVector run_ansatz(const AnsatzSchedule& schedule, const WalkGenerator& gen,
                       const PhasorDiagonal& phasor, PropagatorKind kind) {
  schedule.validate();
  StateVector psi = evolve_walk(zero_state(gen.basis_ptr()), gen, schedule.tau0, kind);
  for (const auto& layer : schedule.layers) {
    psi = apply_phasor(psi, phasor, layer.gamma);
    psi = evolve_walk(psi, gen, layer.tau, kind);
  }
  return psi;
}

double success_probability(const StateVector& state, std::span<const std::size_t> target) {
  if (target.empty()) throw Error(ErrorKind::empty_target, "target index set is empty");
  double p = 0.0;
  for (std::size_t idx : target) {
    if (idx >= state.dimension()) {
      throw Error(ErrorKind::inconsistent_target, "target index out of range");
    }
    p += std::norm(state.amplitudes[static_cast<Eigen::Index>(idx)]);
  }
  return p;
}

double overlap_probability(const StateVector& state, const Eigen::VectorXcd& target) {
  if (target.size() != state.amplitudes.size()) {
    throw Error(ErrorKind::inconsistent_basis, "target dimension does not match state");
  }
  return std::norm(target.dot(state.amplitudes));
}

}  // namespace qwalk
