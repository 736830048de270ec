#pragma once

// Atom geometry and compilation of walk schedules into analog programs.
//
// Walk segments become Rabi pulses of area 2 tau. Global phasors become
// zero-duration jumps of the Rabi phase by -gamma. Local phasors become
// local-detuning triangles on the masked sites with the Rabi drive off; the
// accumulated e^{+i phi n} equals e^{-i gamma n} for phi = -gamma mod 2 pi.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/ctqw.hpp"
#include "qwalk/waveform.hpp"

namespace qwalk {

struct Position {
  double x = 0.0;  // um
  double y = 0.0;
};

struct AtomLayout {
  std::vector<Position> positions;
  double r_min = 0.0;  // largest distance between atoms joined by a constraint edge
  double r_max = 0.0;  // smallest distance between atoms not joined by an edge
  double eta = 1.0;
  double r_b = 0.0;    // eta sqrt(r_min r_max)
  double D = 0.0;      // ring radius
};

double dynamic_blockade_radius(double omega, const PhysicalConstants& constants = {});

struct EtaEstimate {
  double eta = 1.0;
  double n_b = 0.0;         // blockaded interactions per vertex
  double n_u = 0.0;         // weighted unblockaded interactions per vertex
  double error_norm = 0.0;  // ||H_err|| / N in units of Omega_b^2, Omega_b = C6 / r_b^6
};

/// eta = (n_b / (4 n_u))^{1/24}.
double eta_from_counts(double n_b, double n_u);

/// Per-vertex counts from positions and the constraint graph. Each non-edge
/// pair contributes (2 r_min / r_ij)^12, the V^2 weight of the pair relative
/// to a pair at twice the edge length (the nearest non-neighbour of a chain).
/// Throws degenerate-geometry if r_min >= r_max.
EtaEstimate compute_eta(const std::vector<Position>& positions, const ConstraintGraph& graph);

/// Same estimate for an n-vertex ring, independent of its radius.
EtaEstimate ring_eta(int n);

struct LayoutOptions {
  bool use_eta = true;          // false: eta = 1
  std::optional<double> eta;    // override of the ring estimate
  double scale = 1.0;           // optional variational factor on D
  bool hardware_constrained = false;  // 0.1 um quantization and 2 um row snap
  double row_spacing = 2.0;     // um
  double quantum = 0.1;         // um
};

/// n atoms equally spaced on a circle of radius
/// D = scale * r_d / (2 eta sqrt(sin(pi/n) sin(2 pi/n))), r_d = (C6 / omega_avg)^{1/6}.
AtomLayout ring_layout(int n, const PhysicalConstants& constants, double omega_avg,
                       const LayoutOptions& options = {});

/// Quantizes to `quantum` and merges rows closer than `row_spacing`, working
/// inwards from the top and bottom of the array.
std::vector<Position> snap_rows(std::vector<Position> positions, double row_spacing, double quantum);

enum class FragmentKind { walk, global_jump, local_pulse };

struct Fragment {
  FragmentKind kind = FragmentKind::walk;
  double start = 0.0;     // us
  double duration = 0.0;  // us
  double parameter = 0.0; // tau for walks, gamma for phasors
  std::string shape;      // walk regime or "jump" / "triangle x k"
};

struct RydbergProgram {
  int n = 0;
  AtomLayout layout;
  Waveform waveform;
  double duration = 0.0;
  double omega_avg = 0.0;
  AnsatzSchedule schedule;
  PhysicalConstants constants;
  std::vector<Fragment> fragments;
  std::vector<std::string> warnings;  // split local pulses and similar
};

struct CompileOptions {
  LayoutOptions layout;
};

/// Concatenates fragments in ansatz order, then places the atoms for the
/// average Rabi amplitude over drive-on intervals. Zero-length walk segments
/// and zero phases are skipped. Throws invalid-argument for n < 3.
RydbergProgram compile_program(const AnsatzSchedule& schedule, int n,
                               const PhysicalConstants& constants = {},
                               const CompileOptions& options = {});

/// Program with a single walk pulse of length tau.
RydbergProgram compile_walk(double tau, int n, const PhysicalConstants& constants = {},
                            const CompileOptions& options = {});

/// Rabi phase at the end of the program; the emulated state carries the frame
/// factor e^{-i phi_end n} relative to the walk state.
double final_rabi_phase(const RydbergProgram& program);

}  // namespace qwalk
