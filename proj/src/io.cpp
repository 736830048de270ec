#include "qwalk/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::validation, "config field '" + path + "': " + msg);
}

double round_to(double x, double q) {
  if (!(q > 0.0)) return x;
  const double inv = std::round(1.0 / q);
  return std::round(x * inv) / inv;
}

Json channel_json(const Channel& c) {
  Json times = Json::array(), values = Json::array();
  for (const auto& p : c.points()) {
    times.push_back(p.t);
    values.push_back(p.value);
  }
  return Json{{"times", times}, {"values", values}};
}

const char* kind_name(FragmentKind k) {
  switch (k) {
    case FragmentKind::walk: return "walk";
    case FragmentKind::global_jump: return "global_jump";
    case FragmentKind::local_pulse: return "local_pulse";
  }
  return "?";
}

template <class T>
T get_field(const Json& obj, const std::string& key, const std::string& path) {
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    field_error(path + key, "missing or of the wrong type");
  }
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

Bitstring named_target(std::string_view name, int n) {
  int h = -1;
  if (name == "half") h = n / 4 + 1;
  if (name == "mis") h = n / 2;
  if (h >= 0) {
    if (2 * h > n) throw Error(ErrorKind::invalid_argument, "ring too small for target " + std::string(name));
    Bitstring z = 0;
    for (int j = 0; j < h; ++j) z |= Bitstring{1} << (2 * j);
    return z;
  }
  if (static_cast<int>(name.size()) != n) {
    throw Error(ErrorKind::invalid_argument, "target '" + std::string(name) + "' does not have " +
                                                 std::to_string(n) + " bits");
  }
  return parse_bits(name);
}

Json schedule_to_json(const AnsatzSchedule& s, int n) {
  Json layers = Json::array();
  for (const auto& l : s.layers) layers.push_back({{"gamma", l.gamma}, {"tau", l.tau}});
  return Json{{"schema", kScheduleSchema},
              {"n", n},
              {"phasor", s.phasor_kind == PhasorKind::global_hamming ? "global_hamming" : "local_sites"},
              {"phase_mask", format_bits(s.phase_mask, n)},
              {"tau0", s.tau0},
              {"layers", layers}};
}

AnsatzSchedule schedule_from_json(const Json& doc, int& n) {
  if (!doc.is_object()) field_error("", "expected an object");
  if (doc.value("schema", std::string()) != kScheduleSchema) {
    field_error("schema", std::string("expected ") + kScheduleSchema);
  }
  n = get_field<int>(doc, "n", "");
  if (n < 1 || n > kMaxVertices) field_error("n", "out of range");
  AnsatzSchedule s;
  const auto phasor = get_field<std::string>(doc, "phasor", "");
  if (phasor == "global_hamming") s.phasor_kind = PhasorKind::global_hamming;
  else if (phasor == "local_sites") s.phasor_kind = PhasorKind::local_sites;
  else field_error("phasor", "expected global_hamming or local_sites");
  const auto mask = get_field<std::string>(doc, "phase_mask", "");
  if (static_cast<int>(mask.size()) != n) field_error("phase_mask", "length differs from n");
  try {
    s.phase_mask = parse_bits(mask);
  } catch (const std::exception& e) {
    field_error("phase_mask", e.what());
  }
  s.tau0 = get_field<double>(doc, "tau0", "");
  if (!doc.contains("layers") || !doc["layers"].is_array()) field_error("layers", "expected an array");
  for (std::size_t i = 0; i < doc["layers"].size(); ++i) {
    const auto& l = doc["layers"][i];
    const std::string path = "layers[" + std::to_string(i) + "].";
    s.layers.push_back({get_field<double>(l, "gamma", path), get_field<double>(l, "tau", path)});
  }
  try {
    s.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::validation, e.what());
  }
  return s;
}

Json program_to_json(const RydbergProgram& p, double quantum) {
  Json positions = Json::array();
  for (const auto& q : p.layout.positions) positions.push_back({round_to(q.x, quantum), round_to(q.y, quantum)});
  Json fragments = Json::array();
  for (const auto& f : p.fragments) {
    fragments.push_back({{"kind", kind_name(f.kind)},
                         {"start", f.start},
                         {"duration", f.duration},
                         {"parameter", f.parameter},
                         {"shape", f.shape}});
  }
  return Json{{"schema", kProgramSchema},
              {"n", p.n},
              {"duration", p.duration},
              {"omega_avg", p.omega_avg},
              {"layout",
               {{"positions", positions},
                {"eta", p.layout.eta},
                {"radius", p.layout.D},
                {"r_b", p.layout.r_b},
                {"r_min", p.layout.r_min},
                {"r_max", p.layout.r_max}}},
              {"rabi_amplitude", channel_json(p.waveform.rabi_amplitude)},
              {"rabi_phase", channel_json(p.waveform.rabi_phase)},
              {"global_detuning", channel_json(p.waveform.global_detuning)},
              {"local_detuning", channel_json(p.waveform.local_detuning)},
              {"site_weights", p.waveform.site_weights},
              {"fragments", fragments},
              {"warnings", p.warnings},
              {"schedule", schedule_to_json(p.schedule, p.n)}};
}

Json reconstruction_to_json(const ReconstructionResult& r, const SubspaceBasis& basis,
                            double min_probability) {
  const int n = basis.n_vertices();
  Json state = Json::object();
  for (std::size_t k = 0; k < r.model.phi_v.size(); ++k) {
    if (r.model.phi_v[k] > min_probability) state[format_bits(basis.state(k), n)] = r.model.phi_v[k];
  }
  Json target = Json::array();
  for (auto k : r.target) target.push_back(format_bits(basis.state(k), n));
  return Json{{"schema", kReconstructionSchema},
              {"n", n},
              {"state", state},
              {"target", target},
              {"probability", r.target_probability.point},
              {"ci", {r.target_probability.low, r.target_probability.high}},
              {"out_of_subspace_mass", r.out_of_subspace_mass},
              {"phi_perp", r.model.phi_perp},
              {"iterations", r.model.iterations},
              {"converged", r.model.converged}};
}

std::string to_string(Family family) { return family == Family::product ? "product" : "bracelet"; }

std::string to_string(Backend backend) {
  switch (backend) {
    case Backend::ctqw: return "ctqw";
    case Backend::rydberg: return "rydberg";
    case Backend::shots: return "shots";
  }
  return "?";
}

Backend parse_backend(std::string_view name) {
  if (name == "ctqw") return Backend::ctqw;
  if (name == "rydberg") return Backend::rydberg;
  if (name == "shots") return Backend::shots;
  throw Error(ErrorKind::validation, "unknown backend '" + std::string(name) + "'");
}

ExperimentConfig parse_config(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at; ++i) {
      if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
    throw Error(ErrorKind::validation,
                "config line " + std::to_string(line) + " column " + std::to_string(col) + ": syntax error");
  }
  if (!doc.is_object()) field_error("", "top level must be an object");

  static const std::set<std::string> known{"schema", "ring", "targets", "family", "depths", "backends", "channel",
                                           "shots", "resamples", "seed", "workers", "output", "use_eta"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) field_error(key, "unknown field");
  }
  if (doc.value("schema", std::string()) != kConfigSchema) {
    field_error("schema", std::string("expected \"") + kConfigSchema + "\"");
  }

  ExperimentConfig c;
  c.sizes = get_field<std::vector<int>>(doc, "ring", "");
  if (c.sizes.empty()) field_error("ring", "needs at least one size");
  for (int n : c.sizes) {
    if (n < 3 || n > kMaxVertices) field_error("ring", "size " + std::to_string(n) + " out of range");
  }
  if (doc.contains("targets")) c.targets = get_field<std::vector<std::string>>(doc, "targets", "");
  if (c.targets.empty()) field_error("targets", "needs at least one target");
  for (const auto& t : c.targets) {
    for (int n : c.sizes) {
      try {
        named_target(t, n);
      } catch (const Error& e) {
        field_error("targets", e.what());
      }
    }
  }
  if (doc.contains("family")) {
    const auto f = get_field<std::string>(doc, "family", "");
    if (f == "product") c.family = Family::product;
    else if (f == "bracelet") c.family = Family::bracelet;
    else field_error("family", "expected product or bracelet");
  }
  if (c.family == Family::product) {
    c.depths = get_field<std::vector<int>>(doc, "depths", "");
    if (c.depths.empty()) field_error("depths", "needs at least one depth");
    for (int p : c.depths) {
      if (p < 1) field_error("depths", "depths must be >= 1");
    }
  } else if (doc.contains("depths")) {
    field_error("depths", "bracelet depth follows from the peak scan; remove this field");
  }
  if (doc.contains("backends")) {
    c.backends.clear();
    for (const auto& b : get_field<std::vector<std::string>>(doc, "backends", "")) {
      try {
        c.backends.push_back(parse_backend(b));
      } catch (const Error&) {
        field_error("backends", "unknown backend '" + b + "'");
      }
    }
    if (c.backends.empty()) field_error("backends", "needs at least one backend");
  }
  if (doc.contains("channel")) {
    const auto& ch = doc["channel"];
    if (!ch.is_object()) field_error("channel", "expected {p00, p11}");
    c.channel.p00 = get_field<double>(ch, "p00", "channel.");
    c.channel.p11 = get_field<double>(ch, "p11", "channel.");
    if (!(c.channel.p00 > 0.5 && c.channel.p00 <= 1.0)) field_error("channel.p00", "must lie in (0.5, 1]");
    if (!(c.channel.p11 > 0.5 && c.channel.p11 <= 1.0)) field_error("channel.p11", "must lie in (0.5, 1]");
  }
  if (doc.contains("shots")) c.shots = get_field<int>(doc, "shots", "");
  if (c.shots < 1) field_error("shots", "must be >= 1");
  if (doc.contains("resamples")) c.resamples = get_field<int>(doc, "resamples", "");
  if (c.resamples < 10) field_error("resamples", "must be >= 10");
  if (doc.contains("seed")) c.seed = get_field<std::uint64_t>(doc, "seed", "");
  if (doc.contains("workers")) c.workers = get_field<int>(doc, "workers", "");
  if (c.workers < 1) field_error("workers", "must be >= 1");
  if (doc.contains("output")) c.output = get_field<std::string>(doc, "output", "");
  if (doc.contains("use_eta")) c.use_eta = get_field<bool>(doc, "use_eta", "");
  return c;
}

Json config_to_json(const ExperimentConfig& c) {
  Json backends = Json::array();
  for (auto b : c.backends) backends.push_back(to_string(b));
  Json doc{{"schema", kConfigSchema}, {"ring", c.sizes}, {"targets", c.targets}, {"family", to_string(c.family)}};
  if (c.family == Family::product) doc["depths"] = c.depths;
  doc["backends"] = backends;
  doc["channel"] = {{"p00", c.channel.p00}, {"p11", c.channel.p11}};
  doc["shots"] = c.shots;
  doc["resamples"] = c.resamples;
  doc["seed"] = c.seed;
  doc["workers"] = c.workers;
  doc["output"] = c.output;
  doc["use_eta"] = c.use_eta;
  return doc;
}

}  // namespace qwalk
