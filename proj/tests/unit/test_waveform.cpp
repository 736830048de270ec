#include "doctest.h"

#include <cmath>

#include "qwalk/error.hpp"
#include "qwalk/waveform.hpp"

using namespace qwalk;

TEST_CASE("channels") {
  Channel c;
  c.append(0.0, 0.0);
  c.append(0.1, 2.0);
  c.append(0.1, 4.0);
  c.append(0.3, 0.0);
  CHECK(c.value(0.05) == doctest::Approx(1.0));
  CHECK(c.value(0.1) == doctest::Approx(4.0));
  CHECK(c.value(0.2) == doctest::Approx(2.0));
  CHECK(c.value(-1.0) == 0.0);
  CHECK(c.value(0.5) == 0.0);
  CHECK(c.area() == doctest::Approx(0.1 + 0.4));
  CHECK(c.max_slew() == doctest::Approx(20.0));
  CHECK(c.max_abs() == doctest::Approx(4.0));
  CHECK_THROWS_AS(c.append(0.2, 1.0), Error);

  Channel d;
  d.append(0.0, 0.0);
  d.append(0.1, 1.0);
  Channel e = d;
  e.extend(d, 0.1);
  CHECK(e.points().size() == 4);
  CHECK(e.end_time() == doctest::Approx(0.2));
}

TEST_CASE("walk pulse regimes") {
  const auto a = synthesize_walk_pulse(0.3);
  CHECK(a.regime == WalkRegime::short_triangle);
  CHECK(a.duration == doctest::Approx(0.10));
  CHECK(a.peak == doctest::Approx(12.0));

  const auto b = synthesize_walk_pulse(0.5);
  CHECK(b.regime == WalkRegime::long_triangle);
  CHECK(b.duration == doctest::Approx(0.1266).epsilon(1e-3));
  CHECK(b.peak == doctest::Approx(15.8));

  const auto c = synthesize_walk_pulse(0.7);
  CHECK(c.regime == WalkRegime::reduced_trapezoid);
  CHECK(c.duration == doctest::Approx(0.15));
  CHECK(c.peak < 15.8);

  const auto d = synthesize_walk_pulse(1.0);
  CHECK(d.regime == WalkRegime::full_trapezoid);
  CHECK(d.duration == doctest::Approx(0.177).epsilon(2e-3));
  CHECK(d.peak == doctest::Approx(15.8));

  CHECK_THROWS_AS(synthesize_walk_pulse(0.0), Error);
  CHECK_THROWS_AS(synthesize_walk_pulse(-0.1), Error);
}

TEST_CASE("walk pulse area identity across regimes and boundaries") {
  const PhysicalConstants k;
  std::vector<double> taus{0.395, 0.5925, 0.79, 0.40, 0.59, 0.79};
  for (int j = 1; j <= 400; ++j) taus.push_back(0.005 * j);
  for (double tau : taus) {
    const auto w = synthesize_walk_pulse(tau);
    CAPTURE(tau);
    CHECK(std::abs(w.rabi.area() - 2.0 * tau) <= 1e-9 * 2.0 * tau);
    CHECK(w.peak <= k.omega_max + 1e-12);
    CHECK(w.rabi.max_abs() <= k.omega_max + 1e-12);
    CHECK(w.rabi.max_slew() <= k.omega_max / k.rise_time * (1.0 + 1e-9));
    CHECK(w.rabi.end_time() == doctest::Approx(w.duration));
  }
  // duration is continuous at every boundary, the peak only where both shapes reach the cap
  for (double edge : {0.395, 0.5925, 0.79}) {
    const auto lo = synthesize_walk_pulse(edge - 1e-9);
    const auto hi = synthesize_walk_pulse(edge + 1e-9);
    CHECK(std::abs(lo.duration - hi.duration) < 1e-6);
    if (edge != 0.5925) CHECK(std::abs(lo.peak - hi.peak) < 1e-5);
  }
  CHECK(synthesize_walk_pulse(0.5925 + 1e-9).peak == doctest::Approx(0.75 * 15.8));
}

TEST_CASE("local phase pulses") {
  const auto small = synthesize_local_phase(1.0);
  CHECK(small.triangles == 1);
  CHECK_FALSE(small.split);
  CHECK(small.duration == doctest::Approx(0.1));
  CHECK(small.detuning.area() == doctest::Approx(1.0));

  // pi over a 0.1 us triangle needs a 62.8 rad/us peak, above the 62 cap
  const auto pi = synthesize_local_phase(M_PI);
  CHECK(pi.split);
  CHECK(pi.triangles == 2);
  CHECK(pi.detuning.area() == doctest::Approx(M_PI));
  CHECK(pi.detuning.max_abs() <= 62.0);

  const auto none = synthesize_local_phase(0.0);
  CHECK(none.detuning.area() == 0.0);
}

TEST_CASE("cap checks") {
  Waveform w;
  w.rabi_amplitude.append(0.0, 0.0);
  w.rabi_amplitude.append(0.05, 15.8);
  w.rabi_amplitude.append(0.10, 0.0);
  CHECK(check_caps(w).ok);

  Waveform over = w;
  over.rabi_amplitude = Channel{};
  over.rabi_amplitude.append(0.0, 0.0);
  over.rabi_amplitude.append(0.01, 20.0);
  over.rabi_amplitude.append(0.02, 0.0);
  const auto r = check_caps(over);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.violations.empty());

  Waveform clash = w;
  clash.local_detuning.append(0.0, 0.0);
  clash.local_detuning.append(0.05, 10.0);
  clash.local_detuning.append(0.10, 0.0);
  clash.site_weights = {1.0, 0.0, 1.0};
  CHECK_FALSE(check_caps(clash).ok);
}
