#include "qwalk/rydberg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

double dist(const Position& a, const Position& b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool is_edge(const ConstraintGraph& g, int i, int j) {
  return (g.neighbor_mask(i) >> j) & 1U;
}

void fill_radii(AtomLayout& layout, const ConstraintGraph& g) {
  const int n = static_cast<int>(layout.positions.size());
  layout.r_min = 0.0;
  layout.r_max = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double r = dist(layout.positions[static_cast<std::size_t>(i)],
                            layout.positions[static_cast<std::size_t>(j)]);
      if (is_edge(g, i, j)) {
        layout.r_min = std::max(layout.r_min, r);
      } else {
        layout.r_max = std::min(layout.r_max, r);
      }
    }
  }
}

double wrap_phase(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phi, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

}  // namespace

double dynamic_blockade_radius(double omega, const PhysicalConstants& c) {
  if (!(omega > 0.0)) throw Error(ErrorKind::invalid_argument, "omega must be positive");
  return std::pow(c.c6 / omega, 1.0 / 6.0);
}

double eta_from_counts(double n_b, double n_u) {
  if (!(n_b > 0.0) || !(n_u > 0.0)) throw Error(ErrorKind::invalid_argument, "counts must be positive");
  return std::pow(n_b / (4.0 * n_u), 1.0 / 24.0);
}

EtaEstimate compute_eta(const std::vector<Position>& positions, const ConstraintGraph& graph) {
  const int n = static_cast<int>(positions.size());
  if (n != graph.n_vertices()) throw Error(ErrorKind::invalid_argument, "one position per vertex");
  AtomLayout layout;
  layout.positions = positions;
  fill_radii(layout, graph);
  if (!(layout.r_min < layout.r_max)) {
    throw Error(ErrorKind::degenerate_geometry, "edge and non-edge distances overlap");
  }
  EtaEstimate e;
  const double ref = 2.0 * layout.r_min;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (is_edge(graph, i, j)) {
        e.n_b += 1.0;
      } else {
        e.n_u += std::pow(ref / dist(positions[static_cast<std::size_t>(i)],
                                     positions[static_cast<std::size_t>(j)]), 12);
      }
    }
  }
  e.n_b /= n;
  e.n_u /= n;
  e.eta = eta_from_counts(e.n_b, e.n_u);
  e.error_norm = std::sqrt(e.n_b * e.n_u) * std::pow(layout.r_min / layout.r_max, 6);
  return e;
}

EtaEstimate ring_eta(int n) {
  if (n < 5) throw Error(ErrorKind::degenerate_geometry, "rings below 5 sites have no non-edge");
  std::vector<Position> pos;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / n;
    pos.push_back({std::cos(a), std::sin(a)});
  }
  return compute_eta(pos, ring_graph(n));
}

std::vector<Position> snap_rows(std::vector<Position> positions, double row_spacing, double quantum) {
  auto q = [&](double v) { return std::round(v / quantum) * quantum; };
  for (auto& p : positions) {
    p.x = q(p.x);
    p.y = q(p.y);
  }
  std::vector<std::size_t> order(positions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto merge = [&](auto cmp) {
    std::sort(order.begin(), order.end(), cmp);
    std::size_t i = 0;
    // only the outer half of the array, where rows crowd together
    while (i < order.size() / 2) {
      const double row = positions[order[i]].y;
      std::size_t j = i + 1;
      while (j < order.size() / 2 && std::abs(positions[order[j]].y - row) < row_spacing - 1e-9) {
        positions[order[j]].y = row;
        ++j;
      }
      i = j;
    }
  };
  merge([&](std::size_t a, std::size_t b) { return positions[a].y > positions[b].y; });
  merge([&](std::size_t a, std::size_t b) { return positions[a].y < positions[b].y; });
  return positions;
}

AtomLayout ring_layout(int n, const PhysicalConstants& c, double omega_avg,
                       const LayoutOptions& options) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "ring needs at least 3 atoms");
  AtomLayout layout;
  if (options.eta) {
    layout.eta = *options.eta;
  } else if (options.use_eta) {
    layout.eta = ring_eta(n).eta;
  }
  const double rd = dynamic_blockade_radius(omega_avg, c);
  const double s1 = std::sin(std::numbers::pi / n);
  const double s2 = std::sin(2.0 * std::numbers::pi / n);
  layout.D = options.scale * rd / (2.0 * layout.eta * std::sqrt(s1 * s2));
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / n;
    layout.positions.push_back({layout.D * std::cos(a), layout.D * std::sin(a)});
  }
  if (options.hardware_constrained) {
    layout.positions = snap_rows(std::move(layout.positions), options.row_spacing, options.quantum);
  }
  fill_radii(layout, ring_graph(n));
  layout.r_b = layout.eta * std::sqrt(layout.r_min * layout.r_max);
  return layout;
}

RydbergProgram compile_program(const AnsatzSchedule& schedule, int n, const PhysicalConstants& c,
                               const CompileOptions& options) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "ring needs at least 3 atoms");
  schedule.validate();
  RydbergProgram prog;
  prog.n = n;
  prog.schedule = schedule;
  prog.constants = c;
  auto& w = prog.waveform;
  w.site_weights.assign(static_cast<std::size_t>(n), 0.0);
  if (schedule.phasor_kind == PhasorKind::local_sites) {
    for (int i = 0; i < n; ++i) {
      if ((schedule.phase_mask >> i) & 1U) w.site_weights[static_cast<std::size_t>(i)] = 1.0;
    }
  }

  double t = 0.0;
  double phase = 0.0;
  double drive_time = 0.0;
  double drive_area = 0.0;
  w.rabi_phase.append(0.0, 0.0);

  auto walk = [&](double tau) {
    if (tau == 0.0) return;
    const auto pulse = synthesize_walk_pulse(tau, c);
    w.rabi_amplitude.extend(pulse.rabi, t);
    prog.fragments.push_back({FragmentKind::walk, t, pulse.duration, tau, to_string(pulse.regime)});
    drive_time += pulse.duration;
    drive_area += pulse.rabi.area();
    t += pulse.duration;
  };
  auto phasor = [&](double gamma) {
    if (gamma == 0.0) return;
    if (schedule.phasor_kind == PhasorKind::global_hamming) {
      w.rabi_phase.append(t, phase);
      phase -= gamma;
      w.rabi_phase.append(t, phase);
      prog.fragments.push_back({FragmentKind::global_jump, t, 0.0, gamma, "jump"});
      return;
    }
    const auto pulse = synthesize_local_phase(wrap_phase(-gamma), c);
    if (pulse.triangles == 0) return;
    if (pulse.split) {
      std::ostringstream os;
      os << "local phase " << pulse.phase << " split into " << pulse.triangles
         << " triangles to respect the detuning cap";
      prog.warnings.push_back(os.str());
    }
    w.rabi_amplitude.append(t, 0.0);
    w.local_detuning.extend(pulse.detuning, t);
    prog.fragments.push_back({FragmentKind::local_pulse, t, pulse.duration, gamma,
                              "triangle x " + std::to_string(pulse.triangles)});
    t += pulse.duration;
  };

  walk(schedule.tau0);
  for (const auto& layer : schedule.layers) {
    phasor(layer.gamma);
    walk(layer.tau);
  }
  if (w.rabi_amplitude.empty()) w.rabi_amplitude.append(0.0, 0.0);
  w.rabi_amplitude.append(t, 0.0);
  w.rabi_phase.append(t, phase);
  w.global_detuning.append(0.0, 0.0);
  w.global_detuning.append(t, 0.0);
  if (w.local_detuning.empty()) w.local_detuning.append(0.0, 0.0);
  w.local_detuning.append(t, 0.0);
  prog.duration = t;

  prog.omega_avg = drive_time > 0.0 ? drive_area / drive_time : c.omega_max;
  prog.layout = ring_layout(n, c, prog.omega_avg, options.layout);

  const auto caps = check_caps(w, c);
  if (!caps.ok) {
    throw Error(ErrorKind::validation, "compiled program violates hardware caps: " + caps.violations.front());
  }
  return prog;
}

RydbergProgram compile_walk(double tau, int n, const PhysicalConstants& c,
                            const CompileOptions& options) {
  AnsatzSchedule s;
  s.tau0 = tau;
  return compile_program(s, n, c, options);
}

double final_rabi_phase(const RydbergProgram& program) {
  const auto& pts = program.waveform.rabi_phase.points();
  return pts.empty() ? 0.0 : pts.back().value;
}

}  // namespace qwalk
