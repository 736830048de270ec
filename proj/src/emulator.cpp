#include "qwalk/emulator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qwalk/error.hpp"
#include "qwalk/propagator.hpp"

namespace qwalk {

namespace {

using cd = std::complex<double>;

struct Model {
  int n = 0;
  Eigen::Index dim = 0;
  Eigen::VectorXd interaction;  // sum_{i<j} V_ij n_i n_j per basis state
  Eigen::VectorXd weight_sum;   // sum_i w_i n_i
  Eigen::VectorXd count;        // sum_i n_i
};

Model build_model(const RydbergProgram& program) {
  Model m;
  m.n = program.n;
  if (m.n > kMaxEmulatedAtoms) {
    throw Error(ErrorKind::invalid_argument, "dense emulation supports at most 14 atoms");
  }
  const auto& pos = program.layout.positions;
  if (static_cast<int>(pos.size()) != m.n) throw Error(ErrorKind::invalid_argument, "layout size mismatch");
  m.dim = Eigen::Index{1} << m.n;
  std::vector<double> V(static_cast<std::size_t>(m.n * m.n), 0.0);
  for (int i = 0; i < m.n; ++i) {
    for (int j = i + 1; j < m.n; ++j) {
      const double r = std::hypot(pos[static_cast<std::size_t>(i)].x - pos[static_cast<std::size_t>(j)].x,
                                  pos[static_cast<std::size_t>(i)].y - pos[static_cast<std::size_t>(j)].y);
      if (!(r > 0.0)) throw Error(ErrorKind::degenerate_geometry, "coincident atoms");
      V[static_cast<std::size_t>(i * m.n + j)] = program.constants.c6 / std::pow(r, 6);
    }
  }
  const auto& w = program.waveform.site_weights;
  m.interaction.resize(m.dim);
  m.weight_sum.resize(m.dim);
  m.count.resize(m.dim);
  for (Eigen::Index s = 0; s < m.dim; ++s) {
    double e = 0.0, ws = 0.0;
    int c = 0;
    for (int i = 0; i < m.n; ++i) {
      if (!((s >> i) & 1)) continue;
      ++c;
      if (static_cast<std::size_t>(i) < w.size()) ws += w[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m.n; ++j) {
        if ((s >> j) & 1) e += V[static_cast<std::size_t>(i * m.n + j)];
      }
    }
    m.interaction[s] = e;
    m.weight_sum[s] = ws;
    m.count[s] = c;
  }
  return m;
}

std::vector<double> breakpoints(const Waveform& w, double duration) {
  std::vector<double> t{0.0, duration};
  for (const Channel* ch : {&w.rabi_amplitude, &w.rabi_phase, &w.global_detuning, &w.local_detuning}) {
    for (const auto& p : ch->points()) {
      if (p.t > 0.0 && p.t < duration) t.push_back(p.t);
    }
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

Eigen::VectorXcd integrate(const RydbergProgram& program, const Model& m, Eigen::VectorXcd psi,
                           double max_step, int& steps) {
  const auto& w = program.waveform;
  const auto times = breakpoints(w, program.duration);
  Eigen::VectorXd diag(m.dim);
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double a = times[k - 1];
    const double b = times[k];
    const double len = b - a;
    if (!(len > 0.0)) continue;
    // The phase is constant between breakpoints and every channel is linear,
    // so a Rabi-off interval is diagonal and its midpoint exponent is exact.
    const bool rabi_off = w.rabi_amplitude.value(a) == 0.0 && w.rabi_amplitude.value(0.5 * (a + b)) == 0.0 &&
                          w.rabi_amplitude.value(std::nextafter(b, a)) == 0.0;
    const int substeps = rabi_off ? 1 : std::max(1, static_cast<int>(std::ceil(len / max_step - 1e-9)));
    const double h = len / substeps;
    for (int q = 0; q < substeps; ++q) {
      const double tm = a + (q + 0.5) * h;
      const double omega = w.rabi_amplitude.value(tm);
      const double phi = w.rabi_phase.value(tm);
      const double Delta = w.global_detuning.value(tm);
      const double delta = w.local_detuning.value(tm);
      diag = m.interaction - Delta * m.count - delta * m.weight_sum;
      ++steps;
      if (omega == 0.0) {
        for (Eigen::Index s = 0; s < m.dim; ++s) psi[s] *= std::exp(cd(0.0, -h * diag[s]));
        continue;
      }
      const cd lower = 0.5 * omega * std::exp(cd(0.0, phi));   // |g><r|
      const cd raise = std::conj(lower);                       // |r><g|
      const int n = m.n;
      HermitianOp op = [&, lower, raise, n](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
        out = diag.cwiseProduct(in);
        for (Eigen::Index s = 0; s < m.dim; ++s) {
          cd acc = 0.0;
          for (int i = 0; i < n; ++i) {
            const Eigen::Index bit = Eigen::Index{1} << i;
            acc += (s & bit) ? raise * in[s ^ bit] : lower * in[s | bit];
          }
          out[s] += acc;
        }
      };
      psi = krylov_expv(op, psi, h);
    }
  }
  return psi;
}

}  // namespace

EmulationResult emulate_from(const RydbergProgram& program, const Eigen::VectorXcd& initial,
                             const EmulatorOptions& options) {
  if (!(options.max_step > 0.0)) throw Error(ErrorKind::invalid_argument, "step must be positive");
  const Model m = build_model(program);
  if (initial.size() != m.dim) throw Error(ErrorKind::invalid_argument, "initial state dimension");
  EmulationResult result;
  result.n = m.n;
  result.state = integrate(program, m, initial, options.max_step, result.steps);
  if (options.richardson) {
    int fine_steps = 0;
    Eigen::VectorXcd fine = integrate(program, m, initial, 0.5 * options.max_step, fine_steps);
    result.richardson_error = (fine - result.state).norm();
    result.state = std::move(fine);
    result.steps += fine_steps;
    if (result.richardson_error > options.tolerance) {
      throw Error(ErrorKind::integration_failure,
                  "step halving changed the state by " + std::to_string(result.richardson_error) +
                      " (tolerance " + std::to_string(options.tolerance) + ", step " +
                      std::to_string(options.max_step) + " us)");
    }
  }
  return result;
}

EmulationResult emulate(const RydbergProgram& program, const EmulatorOptions& options) {
  if (program.n > kMaxEmulatedAtoms) {
    throw Error(ErrorKind::invalid_argument, "dense emulation supports at most 14 atoms");
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << program.n);
  psi[0] = 1.0;
  return emulate_from(program, psi, options);
}

Eigen::VectorXcd project_to_subspace(const Eigen::VectorXcd& full, const SubspaceBasis& basis) {
  if (full.size() != (Eigen::Index{1} << basis.n_vertices())) {
    throw Error(ErrorKind::inconsistent_basis, "full-space dimension does not match basis");
  }
  Eigen::VectorXcd sub(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    sub[static_cast<Eigen::Index>(k)] = full[static_cast<Eigen::Index>(basis.state(k))];
  }
  return sub;
}

Eigen::VectorXcd embed_in_full_space(const Eigen::VectorXcd& sub, const SubspaceBasis& basis) {
  if (sub.size() != static_cast<Eigen::Index>(basis.size())) {
    throw Error(ErrorKind::inconsistent_basis, "subspace dimension does not match basis");
  }
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(Eigen::Index{1} << basis.n_vertices());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    full[static_cast<Eigen::Index>(basis.state(k))] = sub[static_cast<Eigen::Index>(k)];
  }
  return full;
}

double leakage(const Eigen::VectorXcd& full, const SubspaceBasis& basis) {
  return std::max(0.0, full.squaredNorm() - project_to_subspace(full, basis).squaredNorm());
}

double walk_fidelity(const EmulationResult& result, const RydbergProgram& program,
                     const StateVector& walk_state) {
  const auto& basis = *walk_state.basis;
  const double phi = final_rabi_phase(program);
  Eigen::VectorXcd sub = project_to_subspace(result.state, basis);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    sub[static_cast<Eigen::Index>(k)] *= std::exp(cd(0.0, phi * hamming_weight(basis.state(k))));
  }
  return std::norm(walk_state.amplitudes.dot(sub));
}

double basis_probability(const EmulationResult& result, Bitstring z) {
  if (z >= static_cast<Bitstring>(result.state.size())) {
    throw Error(ErrorKind::inconsistent_target, "bitstring outside the emulated register");
  }
  return std::norm(result.state[static_cast<Eigen::Index>(z)]);
}

}  // namespace qwalk
