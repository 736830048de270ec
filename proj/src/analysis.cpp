#include "qwalk/analysis.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <optional>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

constexpr double kZ95 = 1.959963984540054;
constexpr double kAlphaMax = 1.0 - 1e-12;

std::vector<std::size_t> member_indices(const DihedralOrbit& orbit, const SubspaceBasis& basis) {
  return orbit_indices(orbit, basis);
}

void record(QuenchTrace& trace, double tau, const Eigen::VectorXcd& amps,
            const std::vector<std::size_t>& members, std::size_t rep, double weight) {
  double pop = 0.0;
  for (auto k : members) pop += std::norm(amps[static_cast<Eigen::Index>(k)]);
  (void)tau;
  trace.orbit_population.back() += weight * pop;
  trace.representative_population.back() += weight * std::norm(amps[static_cast<Eigen::Index>(rep)]);
}

}  // namespace

AmplificationPoint amplification(double subspace_size, double success, double target_cardinality) {
  if (!(target_cardinality > 0.0)) throw Error(ErrorKind::empty_target, "target cardinality must be positive");
  if (!(success >= 0.0 && success <= 1.0)) throw Error(ErrorKind::invalid_argument, "success outside [0, 1]");
  return {subspace_size, success, target_cardinality, subspace_size * success / target_cardinality};
}

std::string PowerLawFit::speedup_text() const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  if (!speedup_high) {
    os << ">= " << speedup_low;
  } else {
    os << speedup << " [" << speedup_low << ", " << *speedup_high << "]";
  }
  return os.str();
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y, FitWeighting weighting,
                          std::span<const double> sigma) {
  const std::size_t m = x.size();
  if (m != y.size()) throw Error(ErrorKind::invalid_argument, "x and y sizes differ");
  if (m < 3) throw Error(ErrorKind::invalid_argument, "power-law fit needs at least 3 points");
  if (weighting == FitWeighting::explicit_sigma && sigma.size() != m) {
    throw Error(ErrorKind::invalid_argument, "one sigma per point");
  }
  std::vector<double> w(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw Error(ErrorKind::invalid_argument, "x and y must be positive");
    double s = 1.0;
    if (weighting == FitWeighting::relative) s = y[i];
    if (weighting == FitWeighting::explicit_sigma) s = sigma[i];
    if (!(s > 0.0)) throw Error(ErrorKind::invalid_argument, "sigma must be positive");
    w[i] = 1.0 / (s * s);
  }

  // start from the log-log line
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  const double denom = m * sxx - sx * sx;
  if (!(std::abs(denom) > 0.0)) throw Error(ErrorKind::singular_fit, "all x values equal");
  double alpha = std::min(kAlphaMax, (m * sxy - sx * sy) / denom);
  double c = std::exp((sy - alpha * sx) / static_cast<double>(m));

  auto chi2 = [&](double cc, double aa) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = y[i] - cc * std::pow(x[i], aa);
      s += w[i] * r * r;
    }
    return s;
  };
  auto normal = [&](double cc, double aa, Eigen::Matrix2d& JtJ, Eigen::Vector2d& Jtr) {
    JtJ.setZero();
    Jtr.setZero();
    for (std::size_t i = 0; i < m; ++i) {
      const double p = std::pow(x[i], aa);
      const Eigen::Vector2d J(p, cc * p * std::log(x[i]));
      const double r = y[i] - cc * p;
      JtJ += w[i] * J * J.transpose();
      Jtr += w[i] * r * J;
    }
  };

  PowerLawFit fit;
  double lambda = 1e-3;
  double current = chi2(c, alpha);
  Eigen::Matrix2d JtJ;
  Eigen::Vector2d Jtr;
  for (fit.iterations = 0; fit.iterations < 500; ++fit.iterations) {
    normal(c, alpha, JtJ, Jtr);
    Eigen::Matrix2d A = JtJ;
    A.diagonal() *= (1.0 + lambda);
    const Eigen::Vector2d step = A.ldlt().solve(Jtr);
    const double c_new = c + step[0];
    const double a_new = std::min(kAlphaMax, alpha + step[1]);
    const double trial = chi2(c_new, a_new);
    if (trial <= current) {
      const double rel = std::abs(current - trial) / std::max(current, 1e-300);
      c = c_new;
      alpha = a_new;
      current = trial;
      lambda = std::max(1e-12, lambda * 0.3);
      if (rel < 1e-15 || step.norm() < 1e-14 * (1.0 + std::abs(c))) break;
    } else {
      lambda *= 10.0;
      if (lambda > 1e12) break;
    }
  }
  normal(c, alpha, JtJ, Jtr);
  if (std::abs(JtJ.determinant()) < 1e-300) throw Error(ErrorKind::singular_fit, "singular normal matrix");
  const double dof = static_cast<double>(m) - 2.0;
  const double scale = dof > 0.0 ? current / dof : 0.0;
  const Eigen::Matrix2d cov = JtJ.inverse() * scale;

  fit.c = c;
  fit.alpha = alpha;
  fit.alpha_at_bound = alpha >= kAlphaMax;
  fit.c_error = kZ95 * std::sqrt(std::max(0.0, cov(0, 0)));
  fit.alpha_error = kZ95 * std::sqrt(std::max(0.0, cov(1, 1)));
  fit.alpha_low = alpha - fit.alpha_error;
  fit.alpha_high = alpha + fit.alpha_error;

  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(m);
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = y[i] - c * std::pow(x[i], alpha);
    ss_res += r * r;
    ss_tot += (y[i] - mean) * (y[i] - mean);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;

  auto order = [](double a) { return 1.0 / (1.0 - a); };
  fit.speedup = order(std::min(alpha, kAlphaMax));
  fit.speedup_low = order(std::min(fit.alpha_low, kAlphaMax));
  if (fit.alpha_high < 1.0 && !fit.alpha_at_bound) fit.speedup_high = order(fit.alpha_high);
  return fit;
}

double sigma_from_ci(double low, double high) { return (high - low) / (2.0 * kZ95); }

double grover_reference(double subspace_size, int p) {
  if (p < 1) throw Error(ErrorKind::invalid_argument, "p must be >= 1");
  if (!(subspace_size >= 1.0)) throw Error(ErrorKind::invalid_argument, "subspace size must be >= 1");
  const double theta = std::asin(1.0 / std::sqrt(subspace_size));
  const double s = std::sin((2.0 * p + 1.0) * theta);
  return s * s;
}

QuenchTrace quench_states(std::span<const StateVector> members, const DihedralOrbit& orbit,
                          const WalkGenerator& gen, std::span<const double> tau_grid) {
  if (members.empty()) throw Error(ErrorKind::empty_target, "no prepared states");
  const auto idx = member_indices(orbit, gen.basis());
  const std::size_t rep = *gen.basis().index_of(orbit.representative);
  QuenchTrace trace;
  const double weight = 1.0 / static_cast<double>(members.size());
  for (double tau : tau_grid) {
    trace.tau.push_back(tau);
    trace.orbit_population.push_back(0.0);
    trace.representative_population.push_back(0.0);
    for (const auto& psi : members) {
      record(trace, tau, evolve_walk(psi, gen, tau).amplitudes, idx, rep, weight);
    }
  }
  return trace;
}

QuenchTrace quench(const DihedralOrbit& orbit, const WalkGenerator& gen, std::span<const double> tau_grid,
                   QuenchMode mode) {
  std::vector<StateVector> members;
  if (mode == QuenchMode::coherent) {
    members.push_back({gen.basis_ptr(), bracelet_vector(orbit, gen.basis())});
  } else {
    for (Bitstring u : orbit.members) members.push_back(basis_state(gen.basis_ptr(), u));
  }
  return quench_states(members, orbit, gen, tau_grid);
}

QuenchTrace quench_rydberg(std::span<const Eigen::VectorXcd> prepared, const DihedralOrbit& orbit,
                           std::span<const double> tau_grid, const CompileOptions& options,
                           const EmulatorOptions& emulator) {
  if (prepared.empty()) throw Error(ErrorKind::empty_target, "no prepared states");
  const int n = orbit.n_vertices;
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::vector<std::size_t> members(orbit.members.begin(), orbit.members.end());
  const auto rep = static_cast<std::size_t>(orbit.representative);
  QuenchTrace trace;
  const double weight = 1.0 / static_cast<double>(prepared.size());
  for (double tau : tau_grid) {
    trace.tau.push_back(tau);
    trace.orbit_population.push_back(0.0);
    trace.representative_population.push_back(0.0);
    std::optional<RydbergProgram> program;
    if (tau > 0.0) program = compile_walk(tau, n, {}, options);
    for (const auto& psi : prepared) {
      if (psi.size() != dim) throw Error(ErrorKind::invalid_argument, "prepared state is not 2^n");
      if (!program) {
        record(trace, tau, psi, members, rep, weight);
      } else {
        record(trace, tau, emulate_from(*program, psi, emulator).state, members, rep, weight);
      }
    }
  }
  return trace;
}

QuenchTrace quench_density_matrix(const Eigen::MatrixXcd& rho, const DihedralOrbit& orbit,
                                  const WalkGenerator& gen, std::span<const double> tau_grid) {
  const auto dim = static_cast<Eigen::Index>(gen.dimension());
  if (rho.rows() != dim || rho.cols() != dim) throw Error(ErrorKind::inconsistent_basis, "rho dimension");
  const auto& spec = gen.spectrum(true);
  const auto idx = member_indices(orbit, gen.basis());
  const std::size_t rep = *gen.basis().index_of(orbit.representative);
  const Eigen::MatrixXcd V = spec.eigenvectors().cast<std::complex<double>>();
  QuenchTrace trace;
  for (double tau : tau_grid) {
    Eigen::VectorXcd phases(dim);
    for (Eigen::Index k = 0; k < dim; ++k) phases[k] = std::exp(std::complex<double>(0.0, -tau * spec.eigenvalues()[k]));
    const Eigen::MatrixXcd U = V * phases.asDiagonal() * V.adjoint();
    const Eigen::MatrixXcd r = U * rho * U.adjoint();
    double pop = 0.0;
    for (auto k : idx) pop += r(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
    trace.tau.push_back(tau);
    trace.orbit_population.push_back(pop);
    trace.representative_population.push_back(r(static_cast<Eigen::Index>(rep), static_cast<Eigen::Index>(rep)).real());
  }
  return trace;
}

void write_trace_csv(std::ostream& out, const QuenchTrace& trace) {
  out << "tau,orbit_population,representative_population\n";
  out << std::setprecision(12);
  for (std::size_t i = 0; i < trace.tau.size(); ++i) {
    out << trace.tau[i] << ',' << trace.orbit_population[i] << ',' << trace.representative_population[i] << '\n';
  }
}

}  // namespace qwalk
