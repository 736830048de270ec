#include "qwalk/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "qwalk/emulator.hpp"
#include "qwalk/error.hpp"
#include "qwalk/prep_bracelet.hpp"
#include "qwalk/prep_product.hpp"
#include "qwalk/shots.hpp"

namespace qwalk {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Task {
  int n = 0;
  std::string target;
  int p = 0;
};

bool has(const ExperimentConfig& c, Backend b) {
  return std::find(c.backends.begin(), c.backends.end(), b) != c.backends.end();
}

void mitigate(InstanceResult& r, const ShotSet& set, const SubspaceBasis& basis, std::span<const Bitstring> target,
              const ExperimentConfig& config, std::uint64_t seed) {
  std::size_t hits = 0;
  for (Bitstring z : set.shots) {
    if (std::find(target.begin(), target.end(), z) != target.end()) ++hits;
  }
  r.naive = static_cast<double>(hits) / static_cast<double>(set.shots.size());
  std::vector<std::size_t> idx;
  for (Bitstring z : target) idx.push_back(*basis.index_of(z));
  BootstrapOptions boot;
  boot.resamples = config.resamples;
  boot.seed = splitmix(seed);
  const auto rec = reconstruct(set, basis, config.channel, idx, boot);
  r.em = rec.target_probability;
}

void run_product(InstanceResult& r, const ExperimentConfig& config, std::uint64_t seed) {
  const Bitstring z = named_target(r.target_name, r.n);
  auto basis = make_basis(ring_graph(r.n));
  WalkGenerator gen(basis);
  r.subspace_size = basis->size();
  r.target = format_bits(z, r.n);
  const auto best = optimize_product(gen, z, r.p);
  r.tau0 = best.tau0;
  r.tau1 = best.tau1;
  r.perfect = best.success;

  const auto schedule = product_schedule(z, r.n, r.p, best.tau0, best.tau1);
  std::optional<EmulationResult> emulated;
  if (has(config, Backend::rydberg) && r.n <= kMaxEmulatedAtoms) {
    CompileOptions opts;
    opts.layout.use_eta = config.use_eta;
    const auto program = compile_program(schedule, r.n, {}, opts);
    emulated = emulate(program);
    r.emulation = basis_probability(*emulated, z);
  }
  if (has(config, Backend::shots)) {
    ShotSet set;
    if (emulated) {
      set = sample_shots(emulated->state, r.n, config.shots, config.channel, seed);
    } else {
      const auto psi = run_ansatz(schedule, gen, make_phasor(schedule, basis));
      std::vector<double> probs(basis->size());
      for (std::size_t k = 0; k < probs.size(); ++k) probs[k] = std::norm(psi.amplitudes[static_cast<Eigen::Index>(k)]);
      set = sample_shots(basis->states(), probs, r.n, config.shots, config.channel, seed);
    }
    const Bitstring t[] = {z};
    mitigate(r, set, *basis, t, config, seed);
  }
}

void run_bracelet(InstanceResult& r, const ExperimentConfig& config, std::uint64_t seed) {
  const Bitstring z0 = named_target(r.target_name, r.n);
  auto basis = make_basis(ring_graph(r.n));
  BraceletSector sector(basis);
  const auto orbit = dihedral_orbit(z0, r.n);
  r.subspace_size = basis->size();
  r.target = format_bits(orbit.representative, r.n);
  r.target_cardinality = orbit.size();
  const auto search = optimize_bracelet(sector, orbit.representative);
  if (!search.best) throw Error(ErrorKind::plan_infeasible, "no feasible peak for " + r.target);
  const auto& plan = *search.best;
  r.p = plan.p;
  r.tau0 = plan.tau;
  r.tau1 = plan.tau_eff();
  r.gamma = plan.gamma;
  r.perfect = plan.success;

  const auto schedule = bracelet_schedule(plan);
  std::optional<EmulationResult> emulated;
  if (has(config, Backend::rydberg) && r.n <= kMaxEmulatedAtoms) {
    CompileOptions opts;
    opts.layout.use_eta = config.use_eta;
    const auto program = compile_program(schedule, r.n, {}, opts);
    emulated = emulate(program);
    const StateVector walk{basis, bracelet_vector(orbit, *basis)};
    r.emulation = walk_fidelity(*emulated, program, walk);
  }
  if (has(config, Backend::shots)) {
    ShotSet set;
    if (emulated) {
      set = sample_shots(emulated->state, r.n, config.shots, config.channel, seed);
    } else {
      const auto psi = sector.lift(bracelet_evolve(sector, plan.tau, plan.gamma));
      std::vector<double> probs(basis->size());
      for (std::size_t k = 0; k < probs.size(); ++k) probs[k] = std::norm(psi[static_cast<Eigen::Index>(k)]);
      set = sample_shots(basis->states(), probs, r.n, config.shots, config.channel, seed);
    }
    mitigate(r, set, *basis, orbit.members, config, seed);
  }
}

std::string fixed(double x, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string opt(const std::optional<double>& x) { return x ? fixed(*x) : ""; }

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Task> tasks;
  for (int n : config.sizes) {
    for (const auto& t : config.targets) {
      if (config.family == Family::product) {
        for (int p : config.depths) tasks.push_back({n, t, p});
      } else {
        tasks.push_back({n, t, 0});
      }
    }
  }
  ExperimentResult out;
  out.instances.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto& r = out.instances[i];
      r.n = tasks[i].n;
      r.target_name = tasks[i].target;
      r.p = tasks[i].p;
      const auto t0 = std::chrono::steady_clock::now();
      const std::uint64_t seed = splitmix(config.seed ^ splitmix(i + 1));
      try {
        if (config.family == Family::product) run_product(r, config, seed);
        else run_bracelet(r, config, seed);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int workers = std::max(1, std::min<int>(config.workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // one scaling fit per (target, depth, backend) over the ring sizes
  std::map<std::pair<std::string, int>, std::vector<const InstanceResult*>> groups;
  std::vector<std::pair<std::string, int>> order;
  for (const auto& r : out.instances) {
    const auto key = std::make_pair(r.target_name, config.family == Family::product ? r.p : 0);
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(&r);
  }
  for (const auto& key : order) {
    for (Backend b : config.backends) {
      FitRecord rec;
      rec.target = key.first;
      rec.p = key.second;
      rec.backend = to_string(b);
      std::vector<double> sigma;
      for (const auto* r : groups[key]) {
        if (!r->error.empty()) continue;
        std::optional<double> prob;
        double card = 1.0;
        if (b == Backend::ctqw) prob = r->perfect;
        if (b == Backend::rydberg) prob = r->emulation;
        if (b == Backend::shots && r->em) {
          prob = r->em->point;
          card = static_cast<double>(r->target_cardinality);
        }
        if (!prob || !(*prob > 0.0)) continue;
        if (b == Backend::shots) {
          sigma.push_back(static_cast<double>(r->subspace_size) / card * sigma_from_ci(r->em->low, r->em->high));
        }
        rec.subspace_size.push_back(static_cast<double>(r->subspace_size));
        rec.amplification.push_back(amplification(static_cast<double>(r->subspace_size), *prob, card).amplification);
      }
      if (rec.subspace_size.size() >= 3) {
        try {
          const bool weighted = b == Backend::shots &&
                                std::all_of(sigma.begin(), sigma.end(), [](double s) { return s > 0.0; });
          rec.fit = weighted ? fit_power_law(rec.subspace_size, rec.amplification, FitWeighting::explicit_sigma, sigma)
                             : fit_power_law(rec.subspace_size, rec.amplification);
        } catch (const std::exception& e) {
          rec.error = e.what();
        }
      } else {
        rec.error = "fewer than 3 points";
      }
      out.fits.push_back(std::move(rec));
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

void write_experiment(const std::filesystem::path& dir, const ExperimentConfig& config,
                      const ExperimentResult& result) {
  std::filesystem::create_directories(dir);
  auto open = [&](const std::string& name) {
    std::ofstream f(dir / name);
    if (!f) throw Error(ErrorKind::validation, "cannot write " + (dir / name).string());
    return f;
  };
  {
    auto f = open("results.csv");
    f << "n,subspace_size,target,p,tau0,tau1,gamma,perfect,emulation,naive,em,em_low,em_high,error\n";
    for (const auto& r : result.instances) {
      std::string gamma;
      for (std::size_t i = 0; i < r.gamma.size(); ++i) gamma += (i ? ";" : "") + fixed(r.gamma[i]);
      f << r.n << ',' << r.subspace_size << ',' << r.target << ',' << r.p << ',' << fixed(r.tau0) << ','
        << fixed(r.tau1) << ',' << gamma << ',' << fixed(r.perfect) << ',' << opt(r.emulation) << ','
        << opt(r.naive) << ',' << (r.em ? fixed(r.em->point) : "") << ',' << (r.em ? fixed(r.em->low) : "")
        << ',' << (r.em ? fixed(r.em->high) : "") << ",\"" << r.error << "\"\n";
    }
  }
  Json fits = Json::array();
  for (const auto& rec : result.fits) {
    auto f = open("fig4_" + rec.target + "_p" + std::to_string(rec.p) + "_" + rec.backend + ".csv");
    f << "subspace_size,amplification\n";
    for (std::size_t i = 0; i < rec.subspace_size.size(); ++i) {
      f << fixed(rec.subspace_size[i], 0) << ',' << fixed(rec.amplification[i]) << '\n';
    }
    Json j{{"target", rec.target}, {"p", rec.p}, {"backend", rec.backend}, {"points", rec.subspace_size.size()}};
    if (rec.fit) {
      j["c"] = rec.fit->c;
      j["alpha"] = rec.fit->alpha;
      j["alpha_ci"] = {rec.fit->alpha_low, rec.fit->alpha_high};
      j["r_squared"] = rec.fit->r_squared;
      j["speedup"] = rec.fit->speedup_text();
    } else {
      j["error"] = rec.error;
    }
    fits.push_back(j);
  }
  open("fits.json") << fits.dump(2) << '\n';

  // output location and worker count do not change results
  Json hashed = config_to_json(config);
  hashed.erase("output");
  hashed.erase("workers");
  const auto config_text = config_to_json(config).dump();
  Json runtimes = Json::array();
  Json failures = Json::array();
  for (const auto& r : result.instances) {
    runtimes.push_back({{"n", r.n}, {"target", r.target_name}, {"p", r.p}, {"seconds", r.seconds}});
    if (!r.error.empty()) failures.push_back({{"n", r.n}, {"target", r.target_name}, {"p", r.p}, {"error", r.error}});
  }
  Json manifest{{"schema", kManifestSchema},
                {"config_hash", hex64(fnv1a(hashed.dump()))},
                {"config", Json::parse(config_text)},
                {"version", "1.0.0"},
                {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                              std::to_string(EIGEN_MINOR_VERSION)},
                {"seconds", result.seconds},
                {"runtimes", runtimes},
                {"failures", failures}};
  open("manifest.json") << manifest.dump(2) << '\n';
}

}  // namespace qwalk
