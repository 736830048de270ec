#include "qwalk/shots.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

double ReadoutChannel::transition(int actual, int observed) const {
  if (actual == 0) return observed == 0 ? p00 : 1.0 - p00;
  return observed == 1 ? p11 : 1.0 - p11;
}

void ReadoutChannel::validate() const {
  if (!(p00 >= 0.0 && p00 <= 1.0 && p11 >= 0.0 && p11 <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "channel probabilities must lie in [0, 1]");
  }
}

double channel_likelihood(Bitstring observed, Bitstring actual, int n, const ReadoutChannel& c) {
  double k = 1.0;
  for (int j = 0; j < n; ++j) {
    k *= c.transition(static_cast<int>((actual >> j) & 1U), static_cast<int>((observed >> j) & 1U));
  }
  return k;
}

namespace {

Bitstring apply_channel(Bitstring s, int n, const ReadoutChannel& c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Bitstring z = s;
  for (int j = 0; j < n; ++j) {
    const bool one = (s >> j) & 1U;
    const double keep = one ? c.p11 : c.p00;
    if (u(rng) >= keep) z ^= Bitstring{1} << j;
  }
  return z;
}

}  // namespace

ShotSet sample_shots(std::span<const Bitstring> states, std::span<const double> probabilities, int n,
                     int shots, const ReadoutChannel& channel, std::uint64_t seed) {
  if (shots < 1) throw Error(ErrorKind::invalid_argument, "need at least one shot");
  if (states.size() != probabilities.size() || states.empty()) {
    throw Error(ErrorKind::invalid_argument, "states and probabilities must match and be non-empty");
  }
  channel.validate();
  std::vector<double> cdf(probabilities.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (!(probabilities[k] >= 0.0)) throw Error(ErrorKind::invalid_argument, "negative probability");
    acc += probabilities[k];
    cdf[k] = acc;
  }
  if (!(acc > 0.0)) throw Error(ErrorKind::invalid_argument, "probabilities sum to zero");

  ShotSet set;
  set.n = n;
  set.channel = channel;
  set.seed = seed;
  set.shots.reserve(static_cast<std::size_t>(shots));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, acc);
  for (int i = 0; i < shots; ++i) {
    const double x = u(rng);
    auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
    k = std::min(k, cdf.size() - 1);
    set.shots.push_back(apply_channel(states[k], n, channel, rng));
  }
  return set;
}

ShotSet sample_shots(const Eigen::VectorXcd& full_state, int n, int shots,
                     const ReadoutChannel& channel, std::uint64_t seed) {
  if (full_state.size() != (Eigen::Index{1} << n)) {
    throw Error(ErrorKind::invalid_argument, "state dimension is not 2^n");
  }
  std::vector<Bitstring> states(static_cast<std::size_t>(full_state.size()));
  std::vector<double> probs(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    states[s] = s;
    probs[s] = std::norm(full_state[static_cast<Eigen::Index>(s)]);
  }
  return sample_shots(states, probs, n, shots, channel, seed);
}

void write_shots(std::ostream& out, const ShotSet& set) {
  out << "# n=" << set.n << " shots=" << set.shots.size() << " p00=" << set.channel.p00
      << " p11=" << set.channel.p11 << " seed=" << set.seed << '\n';
  for (Bitstring z : set.shots) out << format_bits(z, set.n) << '\n';
}

ShotSet read_shots(std::istream& in) {
  ShotSet set;
  std::string line;
  int line_no = 0;
  bool header = false;
  long declared = -1;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::validation, "shot file line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream fields(line.substr(1));
      std::string kv;
      while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) fail("expected key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        try {
          if (key == "n") set.n = std::stoi(value);
          else if (key == "shots") declared = std::stol(value);
          else if (key == "p00") set.channel.p00 = std::stod(value);
          else if (key == "p11") set.channel.p11 = std::stod(value);
          else if (key == "seed") set.seed = std::stoull(value);
        } catch (const std::exception&) {
          fail("bad value for " + key);
        }
      }
      header = true;
      continue;
    }
    if (!header) fail("missing '# n=...' header");
    if (static_cast<int>(line.size()) != set.n) fail("bitstring length differs from n");
    try {
      set.shots.push_back(parse_bits(line));
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  if (!header) fail("empty shot file");
  if (set.n < 1 || set.n > kMaxVertices) fail("n out of range");
  if (declared >= 0 && static_cast<std::size_t>(declared) != set.shots.size()) {
    fail("header declares " + std::to_string(declared) + " shots, found " + std::to_string(set.shots.size()));
  }
  set.channel.validate();
  return set;
}

}  // namespace qwalk
