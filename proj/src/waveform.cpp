#include "qwalk/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

void Channel::append(double t, double value) {
  if (!std::isfinite(t) || !std::isfinite(value)) {
    throw Error(ErrorKind::invalid_argument, "non-finite waveform sample");
  }
  if (!points_.empty() && t < points_.back().t) {
    throw Error(ErrorKind::invalid_argument, "waveform times must be non-decreasing");
  }
  points_.push_back({t, value});
}

void Channel::extend(const Channel& other, double offset) {
  for (std::size_t i = 0; i < other.points_.size(); ++i) {
    const Breakpoint p{other.points_[i].t + offset, other.points_[i].value};
    if (i == 0 && !points_.empty() && points_.back().t == p.t && points_.back().value == p.value) {
      continue;
    }
    append(p.t, p.value);
  }
}

double Channel::value(double t) const {
  if (points_.empty() || t < points_.front().t || t > points_.back().t) return 0.0;
  // last breakpoint with time <= t
  auto it = std::upper_bound(points_.begin(), points_.end(), t,
                             [](double x, const Breakpoint& b) { return x < b.t; });
  const auto& a = *(it - 1);
  if (it == points_.end()) return a.value;
  const auto& b = *it;
  if (b.t == a.t) return a.value;
  return a.value + (b.value - a.value) * (t - a.t) / (b.t - a.t);
}

double Channel::area() const {
  double s = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    s += 0.5 * (points_[i].value + points_[i - 1].value) * (points_[i].t - points_[i - 1].t);
  }
  return s;
}

double Channel::max_slew() const {
  double m = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const double dt = points_[i].t - points_[i - 1].t;
    if (dt > 0.0) m = std::max(m, std::abs(points_[i].value - points_[i - 1].value) / dt);
  }
  return m;
}

double Channel::max_abs() const {
  double m = 0.0;
  for (const auto& p : points_) m = std::max(m, std::abs(p.value));
  return m;
}

double Waveform::duration() const {
  return std::max({rabi_amplitude.end_time(), rabi_phase.end_time(), global_detuning.end_time(),
                   local_detuning.end_time()});
}

std::string to_string(WalkRegime regime) {
  switch (regime) {
    case WalkRegime::short_triangle: return "short-triangle";
    case WalkRegime::long_triangle: return "long-triangle";
    case WalkRegime::reduced_trapezoid: return "reduced-trapezoid";
    case WalkRegime::full_trapezoid: return "full-trapezoid";
  }
  return "unknown";
}

WalkRegime walk_regime(double tau, const PhysicalConstants& c) {
  const double r = c.rise_time;
  if (tau < r * c.omega_max / 2.0) return WalkRegime::short_triangle;        // 2r-wide triangle
  if (tau < 3.0 * r * c.omega_max / 4.0) return WalkRegime::long_triangle;  // up to 3r wide
  if (tau <= r * c.omega_max) return WalkRegime::reduced_trapezoid;
  return WalkRegime::full_trapezoid;
}

WalkPulse synthesize_walk_pulse(double tau, const PhysicalConstants& c) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorKind::invalid_argument, "walk time must be positive");
  }
  const double area = 2.0 * tau;
  const double r = c.rise_time;
  WalkPulse pulse;
  pulse.regime = walk_regime(tau, c);
  auto& ch = pulse.rabi;
  switch (pulse.regime) {
    case WalkRegime::short_triangle:
      pulse.duration = 2.0 * r;
      pulse.peak = area / r;
      ch.append(0.0, 0.0);
      ch.append(r, pulse.peak);
      ch.append(2.0 * r, 0.0);
      break;
    case WalkRegime::long_triangle:
      pulse.peak = c.omega_max;
      pulse.duration = 2.0 * area / c.omega_max;
      ch.append(0.0, 0.0);
      ch.append(0.5 * pulse.duration, pulse.peak);
      ch.append(pulse.duration, 0.0);
      break;
    case WalkRegime::reduced_trapezoid:
      pulse.duration = 3.0 * r;
      pulse.peak = area / (2.0 * r);
      ch.append(0.0, 0.0);
      ch.append(r, pulse.peak);
      ch.append(2.0 * r, pulse.peak);
      ch.append(3.0 * r, 0.0);
      break;
    case WalkRegime::full_trapezoid: {
      pulse.peak = c.omega_max;
      const double plateau = area / c.omega_max - r;
      pulse.duration = plateau + 2.0 * r;
      ch.append(0.0, 0.0);
      ch.append(r, pulse.peak);
      ch.append(r + plateau, pulse.peak);
      ch.append(pulse.duration, 0.0);
      break;
    }
  }
  return pulse;
}

LocalPhasePulse synthesize_local_phase(double phase, const PhysicalConstants& c) {
  if (!(phase >= 0.0) || !std::isfinite(phase)) {
    throw Error(ErrorKind::invalid_argument, "local phase area must be finite and >= 0");
  }
  LocalPhasePulse pulse;
  pulse.phase = phase;
  if (phase == 0.0) return pulse;
  const double r = c.rise_time;
  const double single_peak = phase / r;  // area = peak * r for a 2r-wide triangle
  pulse.triangles = std::max(1, static_cast<int>(std::ceil(single_peak / c.local_detuning_cap - 1e-12)));
  pulse.split = pulse.triangles > 1;
  const double peak = single_peak / pulse.triangles;
  for (int k = 0; k < pulse.triangles; ++k) {
    const double t0 = 2.0 * r * k;
    if (k == 0) pulse.detuning.append(t0, 0.0);
    pulse.detuning.append(t0 + r, peak);
    pulse.detuning.append(t0 + 2.0 * r, 0.0);
  }
  pulse.duration = 2.0 * r * pulse.triangles;
  return pulse;
}

CapReport check_caps(const Waveform& w, const PhysicalConstants& c) {
  CapReport report;
  constexpr double slack = 1e-9;
  auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };
  auto range = [&](const Channel& ch, const char* name, double lo, double hi) {
    for (const auto& p : ch.points()) {
      if (p.value < lo - slack * std::max(1.0, std::abs(lo)) ||
          p.value > hi + slack * std::max(1.0, std::abs(hi))) {
        std::ostringstream os;
        os << name << " = " << p.value << " at t = " << p.t << " outside [" << lo << ", " << hi << "]";
        fail(os.str());
        return;
      }
    }
  };
  range(w.rabi_amplitude, "rabi amplitude", 0.0, c.omega_max);
  range(w.local_detuning, "local detuning", 0.0, c.local_detuning_cap);
  if (w.rabi_amplitude.max_slew() > (1.0 + slack) * c.omega_max / c.rise_time) {
    fail("rabi amplitude slew exceeds omega_max / rise_time");
  }
  if (w.local_detuning.max_slew() > (1.0 + slack) * c.local_detuning_cap / c.rise_time) {
    fail("local detuning slew exceeds cap / rise_time");
  }
  for (double wi : w.site_weights) {
    if (wi < 0.0 || wi > 1.0) fail("site weight outside [0, 1]");
  }
  // Rabi gated off during local detuning: check segment midpoints of both channels
  auto check_overlap = [&](const Channel& probe) {
    const auto& pts = probe.points();
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i].t <= pts[i - 1].t) continue;
      const double t = 0.5 * (pts[i].t + pts[i - 1].t);
      if (w.rabi_amplitude.value(t) > slack && w.local_detuning.value(t) > slack) {
        std::ostringstream os;
        os << "rabi drive on during local detuning at t = " << t;
        fail(os.str());
        return;
      }
    }
  };
  check_overlap(w.rabi_amplitude);
  check_overlap(w.local_detuning);
  return report;
}

}  // namespace qwalk
