#include "qwalk/prep_bracelet.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

std::size_t target_orbit(const BraceletSector& sector, Bitstring representative) {
  auto k = sector.orbit_index(representative);
  if (!k) {
    throw Error(ErrorKind::inconsistent_target,
                format_bits(representative, sector.basis().n_vertices()) +
                    " is not in the subspace");
  }
  return *k;
}

Eigen::VectorXcd walk(const DenseSpectrum& spec, const Eigen::VectorXcd& v, double tau) {
  return spec.evolve(v, tau);
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0.0 || syy <= 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

PeakScan peak_scan(const BraceletSector& sector, Bitstring representative, double tau_max,
                   double dtau) {
  if (!(dtau > 0.0)) throw Error(ErrorKind::invalid_argument, "dtau must be positive");
  const std::size_t t = target_orbit(sector, representative);
  const int n = sector.basis().n_vertices();

  PeakScan scan;
  scan.dtau = dtau;
  scan.threshold = 1.0 / (2.0 * n);

  const auto& spec = sector.spectrum();
  const auto& V = spec.eigenvectors();
  const auto& lambda = spec.eigenvalues();
  const auto z = static_cast<Eigen::Index>(sector.zero_index());
  // <[z*]| e^{-i tau G} |0> = sum_r V[t,r] V[0,r] e^{-i lambda_r tau}
  Eigen::VectorXd w = V.row(static_cast<Eigen::Index>(t)).transpose().cwiseProduct(V.row(z).transpose());

  const auto steps = static_cast<long>(std::floor(tau_max / dtau + 1e-9));
  for (long j = 1; j <= steps; ++j) {
    const double tau = static_cast<double>(j) * dtau;
    std::complex<double> amp = 0.0;
    for (Eigen::Index r = 0; r < w.size(); ++r) {
      amp += w[r] * std::exp(std::complex<double>(0.0, -lambda[r] * tau));
    }
    scan.tau_grid.push_back(tau);
    scan.populations.push_back(std::norm(amp));
  }
  const auto& pop = scan.populations;
  for (std::size_t j = 1; j + 1 < pop.size(); ++j) {
    if (pop[j] <= scan.threshold || pop[j] <= pop[j - 1]) continue;
    // plateaus resolve to their earliest grid point
    std::size_t k = j + 1;
    while (k < pop.size() && pop[k] == pop[j]) ++k;
    if (k < pop.size() && pop[k] < pop[j]) scan.peaks.push_back({scan.tau_grid[j], pop[j]});
  }
  return scan;
}

BraceletPlan plan_from_peak(double tau_tot, double tau_min_hw) {
  if (!(tau_min_hw > 0.0) || !std::isfinite(tau_tot)) {
    throw Error(ErrorKind::invalid_argument, "invalid peak time or minimum walk time");
  }
  BraceletPlan plan;
  plan.tau_tot = tau_tot;
  plan.p = static_cast<int>(std::floor(tau_tot / tau_min_hw)) - 2;
  if (plan.p <= 1) {
    throw Error(ErrorKind::plan_infeasible,
                "tau_tot = " + std::to_string(tau_tot) + " gives depth " + std::to_string(plan.p));
  }
  plan.tau = tau_tot / (plan.p + 1);
  plan.gamma.assign(static_cast<std::size_t>(plan.p), 0.0);
  return plan;
}

BraceletPlan plan_from_table(double tau_eff, std::span<const double> gamma) {
  if (gamma.empty() || !(tau_eff > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "tabulated plan needs tau_eff > 0 and phases");
  }
  BraceletPlan plan;
  plan.p = static_cast<int>(gamma.size());
  plan.tau_tot = tau_eff;
  plan.tau = tau_eff / (plan.p + 1);
  plan.gamma.assign(gamma.begin(), gamma.end());
  return plan;
}

AnsatzSchedule bracelet_schedule(const BraceletPlan& plan) {
  AnsatzSchedule s;
  s.tau0 = plan.tau;
  s.phasor_kind = PhasorKind::global_hamming;
  for (double g : plan.gamma) s.layers.push_back({g, plan.tau});
  return s;
}

Eigen::VectorXcd bracelet_evolve(const BraceletSector& sector, double tau,
                                 std::span<const double> gamma) {
  const auto& spec = sector.spectrum();
  const auto& h = sector.weights();
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(sector.size()));
  psi[static_cast<Eigen::Index>(sector.zero_index())] = 1.0;
  psi = walk(spec, psi, tau);
  for (double g : gamma) {
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
      psi[k] *= std::exp(std::complex<double>(0.0, -g * h[k]));
    }
    psi = walk(spec, psi, tau);
  }
  return psi;
}

double bracelet_success(const BraceletSector& sector, Bitstring representative, double tau,
                        std::span<const double> gamma) {
  const std::size_t t = target_orbit(sector, representative);
  return std::norm(bracelet_evolve(sector, tau, gamma)[static_cast<Eigen::Index>(t)]);
}

BraceletPlan optimize_plan(const BraceletSector& sector, Bitstring representative,
                           BraceletPlan plan, const BraceletOptions& options) {
  const std::size_t t = target_orbit(sector, representative);
  if (plan.gamma.size() != static_cast<std::size_t>(plan.p)) plan.gamma.assign(static_cast<std::size_t>(plan.p), 0.0);

  auto ctqw = [&](std::span<const double> g) {
    return std::norm(bracelet_evolve(sector, plan.tau, g)[static_cast<Eigen::Index>(t)]);
  };
  auto objective = [&](std::span<const double> g) {
    double p = ctqw(g);
    if (options.joint) {
      BraceletPlan trial = plan;
      trial.gamma.assign(g.begin(), g.end());
      p = 0.5 * (p + options.joint(trial));
    }
    return 1.0 - p;
  };
  TrustRegionOptions tr;
  tr.initial_radius = options.initial_radius;
  tr.final_radius = options.final_radius;
  tr.lower = -options.gamma_bound;
  tr.upper = options.gamma_bound;
  tr.max_evaluations = options.max_evaluations;
  const auto opt = linear_trust_region(objective, plan.gamma, tr);
  plan.gamma = opt.x;
  plan.success = options.joint ? 1.0 - opt.value : ctqw(plan.gamma);
  plan.converged = opt.converged;
  plan.evaluations = opt.evaluations;
  return plan;
}

BraceletSearch optimize_bracelet(const BraceletSector& sector, Bitstring representative,
                                 const BraceletOptions& options) {
  BraceletSearch search;
  search.scan = peak_scan(sector, representative, options.tau_max, options.dtau);
  for (std::size_t m = 1; m < search.scan.peaks.size(); ++m) {
    BraceletPlan plan;
    try {
      plan = plan_from_peak(search.scan.peaks[m].tau, options.tau_min_hw);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::plan_infeasible) throw;
      continue;
    }
    plan = optimize_plan(sector, representative, std::move(plan), options);
    search.tried.push_back(plan);
    if (search.best && plan.success < search.best->success) break;
    search.best = plan;
  }
  return search;
}

std::optional<double> resolvable_minimum(const SpectralProfile& profile, double kappa,
                                         double tau_eff, double weight_threshold) {
  const auto& u = profile.target_weights;
  const double umax = u.size() ? u.maxCoeff() : 0.0;
  const double cut = weight_threshold * umax;
  const double floor = kappa / tau_eff;
  std::optional<double> best;
  for (Eigen::Index r = 0; r < u.size(); ++r) {
    if (u[r] <= cut) continue;
    for (Eigen::Index s = r + 1; s < u.size(); ++s) {
      if (u[s] <= cut) continue;
      const double gap = std::abs(profile.eigenvalues[r] - profile.eigenvalues[s]);
      if (gap >= floor && (!best || gap < *best)) best = gap;
    }
  }
  return best;
}

SpectralProfile spectral_profile(const BraceletSector& sector, Bitstring representative,
                                 double kappa, double tau_eff, double weight_threshold) {
  const std::size_t t = target_orbit(sector, representative);
  SpectralProfile profile;
  profile.eigenvalues = sector.spectrum().eigenvalues();
  profile.eigenvectors = sector.spectrum().eigenvectors();
  profile.target_weight = sector.orbits()[t].hamming_weight();
  profile.kappa = kappa;
  profile.tau_eff = tau_eff;
  const auto d = profile.eigenvalues.size();
  profile.target_weights = Eigen::VectorXd::Zero(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    if (sector.weights()[k] != profile.target_weight) continue;
    profile.target_weights += profile.eigenvectors.row(k).transpose().cwiseAbs2();
  }
  profile.delta_min = resolvable_minimum(profile, kappa, tau_eff, weight_threshold);
  return profile;
}

KappaCalibration calibrate_kappa(std::span<const KappaInstance> instances,
                                 std::span<const double> kappa_grid, int window) {
  if (instances.size() < 10) {
    throw Error(ErrorKind::too_few_instances,
                "need at least 10 instances, got " + std::to_string(instances.size()));
  }
  if (window < 1 || kappa_grid.size() < static_cast<std::size_t>(window)) {
    throw Error(ErrorKind::invalid_argument, "kappa grid shorter than the sliding window");
  }
  KappaCalibration cal;
  cal.kappa_grid.assign(kappa_grid.begin(), kappa_grid.end());
  for (double kappa : kappa_grid) {
    std::vector<double> x, y;
    for (const auto& inst : instances) {
      auto dmin = resolvable_minimum(inst.profile, kappa, inst.tau_eff);
      if (!dmin) continue;
      x.push_back(1.0 / *dmin);
      y.push_back(inst.tau_eff);
    }
    cal.correlation.push_back(x.size() >= 3 ? pearson(x, y) : 0.0);
  }
  double best = -std::numeric_limits<double>::infinity();
  const auto w = static_cast<std::size_t>(window);
  for (std::size_t i = 0; i + w <= cal.correlation.size(); ++i) {
    double mean = 0.0;
    for (std::size_t k = i; k < i + w; ++k) mean += cal.correlation[k];
    mean /= static_cast<double>(w);
    double var = 0.0;
    for (std::size_t k = i; k < i + w; ++k) var += (cal.correlation[k] - mean) * (cal.correlation[k] - mean);
    const double score = mean - 2.0 * std::sqrt(var / static_cast<double>(w));
    if (score > best) {
      best = score;
      cal.window_low = cal.kappa_grid[i];
      cal.window_high = cal.kappa_grid[i + w - 1];
      cal.kappa_star = 0.5 * (cal.window_low + cal.window_high);
    }
  }
  return cal;
}

}  // namespace qwalk
