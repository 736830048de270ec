#include "qwalk/mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <thread>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

constexpr double kFloor = 1e-300;
constexpr double kClip = 1e-12;
constexpr std::size_t kMaxTableEntries = 50'000'000;

double clip(double p) { return std::clamp(p, kClip, 1.0 - kClip); }

double bernoulli_product(Bitstring s, std::span<const double> phi) {
  double p = 1.0;
  for (std::size_t j = 0; j < phi.size(); ++j) p *= ((s >> j) & 1U) ? phi[j] : 1.0 - phi[j];
  return p;
}

double log_prior(std::span<const double> phi, const EMOptions& o) {
  double s = 0.0;
  for (double p : phi) s += (o.alpha - 1.0) * std::log(p) + (o.beta - 1.0) * std::log(1.0 - p);
  return s;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.size() == 1) return sorted.front();
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

double background_likelihood(Bitstring z, std::span<const double> phi_perp, const SubspaceBasis& basis,
                             const ReadoutChannel& c) {
  const int n = basis.n_vertices();
  if (static_cast<int>(phi_perp.size()) != n) throw Error(ErrorKind::invalid_argument, "one phi_perp per bit");
  double full = 1.0;
  for (int j = 0; j < n; ++j) {
    const int zj = static_cast<int>((z >> j) & 1U);
    const double pj = phi_perp[static_cast<std::size_t>(j)];
    full *= (1.0 - pj) * c.transition(0, zj) + pj * c.transition(1, zj);
  }
  double inside = 0.0;
  for (Bitstring s : basis.states()) inside += channel_likelihood(z, s, n, c) * bernoulli_product(s, phi_perp);
  return std::max(0.0, full - inside);
}

double background_likelihood_bruteforce(Bitstring z, std::span<const double> phi_perp,
                                        const SubspaceBasis& basis, const ReadoutChannel& c) {
  const int n = basis.n_vertices();
  if (n > 20) throw Error(ErrorKind::invalid_argument, "brute force limited to 20 bits");
  double sum = 0.0;
  for (Bitstring s = 0; s < (Bitstring{1} << n); ++s) {
    if (basis.contains(s)) continue;
    sum += channel_likelihood(z, s, n, c) * bernoulli_product(s, phi_perp);
  }
  return sum;
}

EMProblem::EMProblem(const ShotSet& shots, const SubspaceBasis& basis, const ReadoutChannel& channel)
    : basis_(&basis), channel_(channel), n_(basis.n_vertices()) {
  channel.validate();
  if (shots.shots.empty()) throw Error(ErrorKind::invalid_argument, "no shots");
  if (shots.n != n_) throw Error(ErrorKind::invalid_argument, "shot length differs from basis");
  std::map<Bitstring, std::size_t> seen;
  for (Bitstring z : shots.shots) seen.emplace(z, 0);
  for (auto& [z, idx] : seen) {
    idx = observed_.size();
    observed_.push_back(z);
  }
  counts_.assign(observed_.size(), 0.0);
  shot_index_.reserve(shots.shots.size());
  for (Bitstring z : shots.shots) {
    const auto idx = seen.at(z);
    shot_index_.push_back(idx);
    counts_[idx] += 1.0;
  }
  const std::size_t K = basis.size();
  if (K * observed_.size() > kMaxTableEntries) {
    throw Error(ErrorKind::invalid_argument, "likelihood table too large for dense EM");
  }
  // K(z|s) = p00^{n00} (1-p00)^{n01} p11^{n11} (1-p11)^{n10}
  std::vector<double> p00(n_ + 1), p01(n_ + 1), p11(n_ + 1), p10(n_ + 1);
  for (int k = 0; k <= n_; ++k) {
    p00[k] = std::pow(channel.p00, k);
    p01[k] = std::pow(1.0 - channel.p00, k);
    p11[k] = std::pow(channel.p11, k);
    p10[k] = std::pow(1.0 - channel.p11, k);
  }
  const Bitstring all = (Bitstring{1} << n_) - 1;
  table_.resize(static_cast<Eigen::Index>(observed_.size()), static_cast<Eigen::Index>(K));
  for (std::size_t u = 0; u < observed_.size(); ++u) {
    const Bitstring z = observed_[u];
    for (std::size_t k = 0; k < K; ++k) {
      const Bitstring s = basis.state(k);
      table_(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(k)) = p11[hamming_weight(s & z)] * p10[hamming_weight(s & ~z & all)] *
                          p01[hamming_weight(~s & z & all)] * p00[hamming_weight(~s & ~z & all)];
    }
  }
}

void EMProblem::background(std::span<const double> phi_perp, Eigen::VectorXd& l_perp,
                           double& z_perp) const {
  const auto K = static_cast<Eigen::Index>(basis_->size());
  Eigen::VectorXd p_out(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    p_out[k] = bernoulli_product(basis_->state(static_cast<std::size_t>(k)), phi_perp);
  }
  z_perp = std::max(kFloor, 1.0 - p_out.sum());
  l_perp.noalias() = table_ * p_out;
  for (Eigen::Index u = 0; u < l_perp.size(); ++u) {
    const Bitstring z = observed_[static_cast<std::size_t>(u)];
    double full = 1.0;
    for (int j = 0; j < n_; ++j) {
      const int zj = static_cast<int>((z >> j) & 1U);
      const double pj = phi_perp[static_cast<std::size_t>(j)];
      full *= (1.0 - pj) * channel_.transition(0, zj) + pj * channel_.transition(1, zj);
    }
    l_perp[u] = std::max(0.0, full - l_perp[u]);
  }
}

double EMProblem::mixture(const Eigen::VectorXd& counts, const Eigen::VectorXd& phi, double pi,
                          const Eigen::VectorXd& l_perp, double z_perp, Eigen::VectorXd& mu) const {
  mu.noalias() = table_ * phi;
  mu += (pi / z_perp) * l_perp;
  double ll = 0.0;
  for (Eigen::Index u = 0; u < mu.size(); ++u) {
    mu[u] = std::max(kFloor, mu[u]);
    if (counts[u] != 0.0) ll += counts[u] * std::log(mu[u]);
  }
  return ll;
}

double EMProblem::objective(std::span<const double> counts, const EMModel& m, const EMOptions& o) const {
  const Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(counts.data(), static_cast<Eigen::Index>(counts.size()));
  Eigen::VectorXd l_perp, mu;
  double z_perp = 1.0;
  background(m.phi_perp, l_perp, z_perp);
  const Eigen::VectorXd phi = Eigen::Map<const Eigen::VectorXd>(m.phi_v.data(), static_cast<Eigen::Index>(m.phi_v.size()));
  return mixture(c, phi, m.pi_perp, l_perp, z_perp, mu) + log_prior(m.phi_perp, o);
}

EMModel EMProblem::solve(const EMOptions& options, const EMModel* warm_start) const {
  return solve(counts_, options, warm_start);
}

EMModel EMProblem::solve(std::span<const double> counts_in, const EMOptions& o,
                         const EMModel* warm_start) const {
  if (counts_in.size() != observed_.size()) throw Error(ErrorKind::invalid_argument, "count vector size");
  if (!(o.alpha > 0.0 && o.beta > 0.0)) throw Error(ErrorKind::invalid_argument, "prior must be positive");
  const auto K = static_cast<Eigen::Index>(basis_->size());
  const auto U = static_cast<Eigen::Index>(observed_.size());
  const Eigen::VectorXd counts = Eigen::Map<const Eigen::VectorXd>(counts_in.data(), U);
  const double total = counts.sum();
  if (!(total > 0.0)) throw Error(ErrorKind::invalid_argument, "no shots");

  EMModel m;
  Eigen::VectorXd phi(K);
  if (warm_start) {
    phi = Eigen::Map<const Eigen::VectorXd>(warm_start->phi_v.data(), K);
    m.phi_perp = warm_start->phi_perp;
    m.pi_perp = warm_start->pi_perp;
  } else {
    // the uniform distribution over all 2^n strings
    const double uniform = std::ldexp(1.0, -n_);
    phi.setConstant(uniform);
    m.pi_perp = 1.0 - uniform * static_cast<double>(K);
    m.phi_perp.assign(static_cast<std::size_t>(n_), 0.5);
  }

  Eigen::VectorXd l_perp, l_trial, mu(U), mu_trial(U), resp_perp(U), phi_new(K);
  std::vector<double> cand(static_cast<std::size_t>(n_)), trial(cand.size());
  double z_perp = 1.0, z_trial = 1.0;

  background(m.phi_perp, l_perp, z_perp);
  double ll = mixture(counts, phi, m.pi_perp, l_perp, z_perp, mu) + log_prior(m.phi_perp, o);
  m.log_likelihood.push_back(ll);
  for (m.iterations = 0; m.iterations < o.max_iterations;) {
    // E-step responsibilities folded into the M-step for the mixture weights
    const Eigen::VectorXd w = counts.cwiseQuotient(mu);
    phi_new = phi.cwiseProduct(table_.transpose() * w) / total;
    resp_perp = ((m.pi_perp / z_perp) * l_perp).cwiseQuotient(mu);
    const double resp_total = counts.dot(resp_perp);
    const double pi_new = resp_total / total;

    // Background update: Beta-regularized posterior bit expectations
    for (int j = 0; j < n_; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      const double pj = m.phi_perp[jj];
      const double e1 = pj * channel_.transition(1, 1) /
                        (pj * channel_.transition(1, 1) + (1.0 - pj) * channel_.transition(0, 1));
      const double e0 = pj * channel_.transition(1, 0) /
                        (pj * channel_.transition(1, 0) + (1.0 - pj) * channel_.transition(0, 0));
      double num = 0.0;
      for (Eigen::Index u = 0; u < U; ++u) {
        const double r = counts[u] * resp_perp[u];
        if (r == 0.0) continue;
        num += r * (((observed_[static_cast<std::size_t>(u)] >> j) & 1U) ? e1 : e0);
      }
      cand[jj] = clip((num + o.alpha) / (resp_total + o.alpha + o.beta));
    }
    // Accept the update, or a step towards it, only if the objective does not drop.
    bool accepted = false;
    double step = 1.0;
    double ll_next = ll;
    for (int h = 0; h < 30 && !accepted; ++h, step *= 0.5) {
      for (std::size_t j = 0; j < cand.size(); ++j) {
        trial[j] = clip(m.phi_perp[j] + step * (cand[j] - m.phi_perp[j]));
      }
      background(trial, l_trial, z_trial);
      ll_next = mixture(counts, phi_new, pi_new, l_trial, z_trial, mu_trial) + log_prior(trial, o);
      accepted = ll_next >= ll;
    }
    double change = (phi_new - phi).lpNorm<1>();
    if (accepted) {
      double change_perp = 0.0;
      for (std::size_t j = 0; j < trial.size(); ++j) change_perp += std::abs(trial[j] - m.phi_perp[j]);
      change += change_perp / n_;
      m.phi_perp = trial;
      l_perp.swap(l_trial);
      z_perp = z_trial;
      mu.swap(mu_trial);
    } else {
      ll_next = mixture(counts, phi_new, pi_new, l_perp, z_perp, mu) + log_prior(m.phi_perp, o);
    }
    phi = phi_new;
    m.pi_perp = pi_new;
    ll = ll_next;
    m.log_likelihood.push_back(ll);
    ++m.iterations;
    if (change < o.epsilon) {
      m.converged = true;
      break;
    }
  }
  m.phi_v.assign(phi.data(), phi.data() + K);
  return m;
}

EMModel em_reconstruct(const ShotSet& shots, const SubspaceBasis& basis, const ReadoutChannel& channel,
                       const EMOptions& options) {
  return EMProblem(shots, basis, channel).solve(options);
}

ConfidenceInterval bootstrap_ci(const EMProblem& problem, const EMModel& full_fit,
                                std::span<const std::size_t> target, const BootstrapOptions& options) {
  if (options.resamples < 1) throw Error(ErrorKind::invalid_argument, "need at least one resample");
  if (!(options.level > 0.0 && options.level < 1.0)) throw Error(ErrorKind::invalid_argument, "level in (0,1)");
  if (target.empty()) throw Error(ErrorKind::empty_target, "empty target");
  for (auto k : target) {
    if (k >= full_fit.phi_v.size()) throw Error(ErrorKind::inconsistent_target, "target index out of range");
  }
  auto target_mass = [&](const EMModel& m) {
    double s = 0.0;
    for (auto k : target) s += m.phi_v[k];
    return s;
  };
  const auto shots = problem.shot_index();
  const std::size_t U = problem.observed().size();
  std::vector<double> estimates(static_cast<std::size_t>(options.resamples));

  auto work = [&](int first, int stride) {
    std::vector<double> counts(U);
    for (int r = first; r < options.resamples; r += stride) {
      std::mt19937_64 rng(splitmix(options.seed ^ splitmix(static_cast<std::uint64_t>(r))));
      std::uniform_int_distribution<std::size_t> pick(0, shots.size() - 1);
      std::fill(counts.begin(), counts.end(), 0.0);
      for (std::size_t i = 0; i < shots.size(); ++i) counts[shots[pick(rng)]] += 1.0;
      estimates[static_cast<std::size_t>(r)] = target_mass(problem.solve(counts, options.em, &full_fit));
    }
  };
  const int workers = std::max(1, std::min(options.workers, options.resamples));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  std::sort(estimates.begin(), estimates.end());
  ConfidenceInterval ci;
  ci.point = target_mass(full_fit);
  ci.low = std::min(ci.point, quantile(estimates, 0.5 * (1.0 - options.level)));
  ci.high = std::max(ci.point, quantile(estimates, 1.0 - 0.5 * (1.0 - options.level)));
  return ci;
}

ReconstructionResult reconstruct(const ShotSet& shots, const SubspaceBasis& basis,
                                 const ReadoutChannel& channel, std::span<const std::size_t> target,
                                 const BootstrapOptions& options) {
  const EMProblem problem(shots, basis, channel);
  ReconstructionResult r;
  r.model = problem.solve(options.em);
  r.target.assign(target.begin(), target.end());
  r.target_probability = bootstrap_ci(problem, r.model, target, options);
  r.out_of_subspace_mass = r.model.pi_perp;
  return r;
}

}  // namespace qwalk
