#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qwalk/emulator.hpp"
#include "qwalk/error.hpp"
#include "qwalk/prep_product.hpp"

using namespace qwalk;
using cd = std::complex<double>;

namespace {

// H(t) assembled from Kronecker products, bit i of the index is atom i
Eigen::MatrixXcd hamiltonian(const RydbergProgram& prog, double t) {
  const int n = prog.n;
  const Eigen::Index dim = Eigen::Index{1} << n;
  const auto& w = prog.waveform;
  const double omega = w.rabi_amplitude.value(t);
  const double phi = w.rabi_phase.value(t);
  const double Delta = w.global_detuning.value(t);
  const double delta = w.local_detuning.value(t);
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    for (int i = 0; i < n; ++i) {
      const Eigen::Index flipped = s ^ (Eigen::Index{1} << i);
      if ((s >> i) & 1) {
        // |g><r| maps s (atom i in r) to flipped
        H(flipped, s) += 0.5 * omega * std::exp(cd(0, phi));
        H(s, flipped) += 0.5 * omega * std::exp(cd(0, -phi));
        const double wi = static_cast<std::size_t>(i) < w.site_weights.size() ? w.site_weights[static_cast<std::size_t>(i)] : 0.0;
        H(s, s) -= Delta + wi * delta;
        for (int j = i + 1; j < n; ++j) {
          if ((s >> j) & 1) {
            const auto& a = prog.layout.positions[static_cast<std::size_t>(i)];
            const auto& b = prog.layout.positions[static_cast<std::size_t>(j)];
            H(s, s) += prog.constants.c6 / std::pow(std::hypot(a.x - b.x, a.y - b.y), 6);
          }
        }
      }
    }
  }
  return H;
}

std::vector<double> knots(const RydbergProgram& prog) {
  std::vector<double> t{0.0, prog.duration};
  for (const Channel* c : {&prog.waveform.rabi_amplitude, &prog.waveform.rabi_phase,
                           &prog.waveform.global_detuning, &prog.waveform.local_detuning}) {
    for (const auto& p : c->points()) t.push_back(p.t);
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

// classical RK4 between knots
Eigen::VectorXcd rk4(const RydbergProgram& prog, Eigen::VectorXcd psi, double h) {
  const auto t = knots(prog);
  const cd mi(0, -1);
  for (std::size_t k = 1; k < t.size(); ++k) {
    const double a = t[k - 1];
    const double len = t[k] - a;
    if (len <= 0.0) continue;
    const int m = std::max(1, static_cast<int>(std::ceil(len / h)));
    const double s = len / m;
    for (int q = 0; q < m; ++q) {
      // sample strictly inside the interval so jumps at the knots are not seen
      const double t0 = a + q * s;
      const double eps = 1e-12 * len;
      const auto H0 = hamiltonian(prog, t0 + eps);
      const auto Hm = hamiltonian(prog, t0 + 0.5 * s);
      const auto H1 = hamiltonian(prog, t0 + s - eps);
      const Eigen::VectorXcd k1 = mi * (H0 * psi);
      const Eigen::VectorXcd k2 = mi * (Hm * (psi + 0.5 * s * k1));
      const Eigen::VectorXcd k3 = mi * (Hm * (psi + 0.5 * s * k2));
      const Eigen::VectorXcd k4 = mi * (H1 * (psi + s * k3));
      psi += s / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return psi;
}

Eigen::VectorXcd ground(int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  v[0] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("no drive leaves populations unchanged") {
  AnsatzSchedule s;
  s.tau0 = 0.5;
  auto prog = compile_program(s, 5);
  prog.waveform.rabi_amplitude = Channel{};
  prog.waveform.rabi_amplitude.append(0.0, 0.0);
  prog.waveform.rabi_amplitude.append(prog.duration, 0.0);
  Eigen::VectorXcd init = Eigen::VectorXcd::Random(32);
  init.normalize();
  const auto r = emulate_from(prog, init);
  for (Eigen::Index k = 0; k < 32; ++k) CHECK(std::norm(r.state[k]) == doctest::Approx(std::norm(init[k])).epsilon(1e-12));
}

TEST_CASE("two blockaded atoms stay below the perturbative bound") {
  RydbergProgram prog;
  prog.n = 2;
  const double omega = 15.8;
  const double rb = dynamic_blockade_radius(omega, prog.constants);
  prog.layout.positions = {{0.0, 0.0}, {0.5 * rb, 0.0}};
  prog.waveform.rabi_amplitude.append(0.0, omega);
  prog.waveform.rabi_amplitude.append(1.0, omega);
  prog.duration = 1.0;
  const double V = prog.constants.c6 / std::pow(0.5 * rb, 6);
  // two-level bound 4 g^2 / V^2 with g = Omega / sqrt(2) coupling the symmetric single excitation to |rr>
  const double bound = 8.0 * std::pow(omega / (2.0 * V), 2);
  for (double T : {0.1, 0.37, 0.8, 1.0}) {
    RydbergProgram p = prog;
    p.waveform.rabi_amplitude = Channel{};
    p.waveform.rabi_amplitude.append(0.0, omega);
    p.waveform.rabi_amplitude.append(T, omega);
    p.duration = T;
    const auto r = emulate(p);
    CHECK(std::norm(r.state[3]) <= bound);
  }
}

TEST_CASE("emulation matches an RK4 oracle") {
  const auto schedule = product_schedule(parse_bits("00101"), 5, 1, 0.45, 0.9);
  auto prog = compile_program(schedule, 5);
  const auto r = emulate(prog, EmulatorOptions{2.5e-4});
  const auto oracle = rk4(prog, ground(5), 2e-5);
  CHECK((r.state - oracle).norm() < 1e-5);
  CHECK(std::abs(r.state.norm() - 1.0) < 1e-8);

  AnsatzSchedule bracelet;
  bracelet.tau0 = 0.3;
  bracelet.layers = {{0.7, 0.3}, {-1.2, 0.3}};
  auto jumps = compile_program(bracelet, 5);
  const auto rj = emulate(jumps, EmulatorOptions{2.5e-4});
  CHECK((rj.state - rk4(jumps, ground(5), 2e-5)).norm() < 1e-5);
}

TEST_CASE("second order in the step") {
  AnsatzSchedule s;
  s.tau0 = 1.2;
  const auto prog = compile_program(s, 5);
  const auto ref = emulate(prog, EmulatorOptions{1.25e-4}).state;
  const double e1 = (emulate(prog, EmulatorOptions{4e-3}).state - ref).norm();
  const double e2 = (emulate(prog, EmulatorOptions{2e-3}).state - ref).norm();
  CHECK(e2 * 3.5 <= e1);

  EmulatorOptions rich;
  rich.richardson = true;
  rich.tolerance = 1e-4;
  const auto r = emulate(prog, rich);
  CHECK(r.richardson_error < rich.tolerance);
  CHECK(r.richardson_error > 0.0);
  rich.max_step = 0.05;
  rich.tolerance = 1e-12;
  CHECK_THROWS_AS(emulate(prog, rich), Error);
}

TEST_CASE("walk pulse stays in the blockade subspace") {
  for (int n = 5; n <= 8; ++n) {
    for (double tau : {0.1, 0.3}) {
      const auto prog = compile_walk(tau, n);
      const auto r = emulate(prog);
      const auto basis = make_basis(ring_graph(n));
      CAPTURE(n);
      CAPTURE(tau);
      CHECK(std::abs(r.state.norm() - 1.0) < 1e-8);
      CHECK(leakage(r.state, *basis) <= 0.05);
      WalkGenerator gen(basis);
      const auto walk = evolve_walk(basis_state(basis, 0), gen, tau);
      CHECK(walk_fidelity(r, prog, walk) > 0.9);
    }
  }
}

TEST_CASE("subspace projection and embedding") {
  const auto basis = make_basis(ring_graph(6));
  Eigen::VectorXcd sub = Eigen::VectorXcd::Random(static_cast<Eigen::Index>(basis->size()));
  const auto full = embed_in_full_space(sub, *basis);
  CHECK(full.size() == 64);
  CHECK((project_to_subspace(full, *basis) - sub).norm() == 0.0);
  CHECK(leakage(full / full.norm(), *basis) == doctest::Approx(0.0));
  AnsatzSchedule s;
  s.tau0 = 0.1;
  CHECK_THROWS_AS(emulate(compile_program(s, kMaxEmulatedAtoms + 1)), Error);
}
