#pragma once

// Piecewise-linear control channels for the analog Rydberg drive and the
// pulse shapes that realize walk and phase fragments.
//
// Walk pulses carry Rabi area 2 tau. Duration is continuous in tau; the peak
// drops from Omega_max to 0.75 Omega_max entering the reduced trapezoid:
//   tau <  0.1 Omega_max / 4        triangle, 0.10 us, peak 40 tau
//   tau <  0.15 Omega_max / 4       triangle, 4 tau / Omega_max us, peak Omega_max
//   tau <= 0.1 Omega_max / 2        trapezoid 0.05/0.05/0.05 us, amplitude 20 tau
//   otherwise                       trapezoid at Omega_max, 2 tau / Omega_max + 0.05 us
// With Omega_max = 15.8 the boundaries are 0.395, 0.5925 and 0.79.

#include <string>
#include <vector>

namespace qwalk {

struct PhysicalConstants {
  double c6 = 5420503.0;             // um^6 rad/us
  double omega_max = 15.8;           // rad/us
  double rise_time = 0.05;           // us
  double local_detuning_cap = 62.0;  // rad/us
};

struct Breakpoint {
  double t = 0.0;
  double value = 0.0;
};

/// Piecewise-linear samples with non-decreasing times. Two breakpoints at the
/// same time encode a jump; the later one holds from that time on.
class Channel {
 public:
  const std::vector<Breakpoint>& points() const noexcept { return points_; }
  bool empty() const noexcept { return points_.empty(); }
  double end_time() const noexcept { return points_.empty() ? 0.0 : points_.back().t; }

  /// Appends a breakpoint. Throws invalid-argument if time decreases.
  void append(double t, double value);
  /// Appends the breakpoints of `other` shifted by `offset`, dropping a first
  /// point that repeats the current last point exactly.
  void extend(const Channel& other, double offset);

  /// Value at t (right-continuous at jumps); 0 outside the sampled range.
  double value(double t) const;
  /// Integral over [0, end_time()].
  double area() const;
  /// Largest |dv/dt| over segments of positive length.
  double max_slew() const;
  double max_abs() const;

 private:
  std::vector<Breakpoint> points_;
};

struct Waveform {
  Channel rabi_amplitude;   // Omega(t), rad/us
  Channel rabi_phase;       // phi(t), rad
  Channel global_detuning;  // Delta(t), rad/us
  Channel local_detuning;   // delta(t), rad/us
  std::vector<double> site_weights;  // w_i in [0, 1]

  double duration() const;
};

enum class WalkRegime { short_triangle, long_triangle, reduced_trapezoid, full_trapezoid };

std::string to_string(WalkRegime regime);

struct WalkPulse {
  WalkRegime regime = WalkRegime::short_triangle;
  double duration = 0.0;  // us
  double peak = 0.0;      // rad/us
  Channel rabi;           // starts at t = 0
};

WalkRegime walk_regime(double tau, const PhysicalConstants& constants = {});

/// Rabi pulse with area 2 tau. Throws invalid-argument for tau <= 0.
WalkPulse synthesize_walk_pulse(double tau, const PhysicalConstants& constants = {});

struct LocalPhasePulse {
  double phase = 0.0;       // total area of delta(t), rad
  int triangles = 0;        // 1 unless the single-triangle peak exceeds the cap
  bool split = false;
  double duration = 0.0;    // us
  Channel detuning;         // starts at t = 0
};

/// Triangles of 2 rise_time base carrying total area `phase` >= 0, split into
/// the fewest equal triangles whose peak stays within the local cap.
LocalPhasePulse synthesize_local_phase(double phase, const PhysicalConstants& constants = {});

struct CapReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks amplitude ranges, slew rates (cap / rise_time) and that the Rabi
/// drive is off wherever local detuning is non-zero.
CapReport check_caps(const Waveform& waveform, const PhysicalConstants& constants = {});

}  // namespace qwalk
