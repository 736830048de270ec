#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qwalk/analysis.hpp"
#include "qwalk/emulator.hpp"
#include "qwalk/error.hpp"
#include "qwalk/io.hpp"
#include "qwalk/pipeline.hpp"
#include "qwalk/prep_bracelet.hpp"
#include "qwalk/prep_product.hpp"
#include "qwalk/shots.hpp"

using namespace qwalk;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::validation, "cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::validation, path + ": " + e.what());
  }
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorKind::validation, "cannot write " + out);
  f << text;
}

AnsatzSchedule load_schedule(const std::string& path, int& n) {
  const Json doc = read_json(path);
  if (doc.value("schema", std::string()) == kProgramSchema) return schedule_from_json(doc.at("schedule"), n);
  return schedule_from_json(doc, n);
}

bool is_validation(ErrorKind k) {
  switch (k) {
    case ErrorKind::validation:
    case ErrorKind::invalid_argument:
    case ErrorKind::inconsistent_basis:
    case ErrorKind::inconsistent_target:
    case ErrorKind::empty_target:
      return true;
    default:
      return false;
  }
}

std::vector<double> tau_grid(double tau_max, double dtau) {
  if (!(dtau > 0.0) || !(tau_max >= 0.0)) throw Error(ErrorKind::invalid_argument, "bad tau grid");
  std::vector<double> grid;
  const auto steps = static_cast<long>(std::floor(tau_max / dtau + 1e-9));
  for (long i = 0; i <= steps; ++i) grid.push_back(static_cast<double>(i) * dtau);
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained quantum-walk state preparation on ring graphs"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Count independent sets and dihedral orbits of a ring");
  int ring = 0;
  bool list = false;
  enumerate->add_option("--ring", ring, "Ring size N")->required()->check(CLI::Range(1, kMaxVertices));
  enumerate->add_flag("--list", list, "Print every orbit representative and size");

  // prep-product
  auto* prep_product = app.add_subcommand("prep-product", "Optimize or evaluate a product-state schedule");
  std::string target = "half";
  int depth = 1;
  std::optional<double> tau0, tau1;
  std::string out;
  prep_product->add_option("--ring", ring, "Ring size N")->required()->check(CLI::Range(3, kMaxVertices));
  prep_product->add_option("--target", target, "half, mis or a bitstring")->capture_default_str();
  prep_product->add_option("--depth", depth, "Ansatz depth p")->check(CLI::PositiveNumber)->capture_default_str();
  prep_product->add_option("--tau0", tau0, "Evaluate at this tau0 instead of optimizing");
  prep_product->add_option("--tau1", tau1, "Evaluate at this tau1 instead of optimizing");
  prep_product->add_option("--out", out, "Schedule JSON path");

  // prep-bracelet
  auto* prep_bracelet = app.add_subcommand("prep-bracelet", "Optimize or evaluate a bracelet-state schedule");
  std::optional<double> tau_eff;
  std::vector<double> gamma;
  prep_bracelet->add_option("--ring", ring, "Ring size N")->required()->check(CLI::Range(3, kMaxVertices));
  prep_bracelet->add_option("--target", target, "half, mis or a bitstring (any orbit member)")->capture_default_str();
  prep_bracelet->add_option("--tau-eff", tau_eff, "Evaluate a tabulated plan with this accumulated walk time");
  prep_bracelet->add_option("--gamma", gamma, "Phases of the tabulated plan")->delimiter(',');
  prep_bracelet->add_option("--out", out, "Schedule JSON path");

  // compile
  auto* compile = app.add_subcommand("compile", "Compile a schedule into an analog program");
  std::string schedule_path;
  bool no_eta = false;
  double scale = 1.0;
  compile->add_option("--schedule", schedule_path, "Schedule JSON")->required();
  compile->add_flag("--no-eta", no_eta, "Place atoms with eta = 1");
  compile->add_option("--scale", scale, "Extra factor on the ring radius")->capture_default_str();
  compile->add_option("--out", out, "Program JSON path");

  // emulate
  auto* emulate_cmd = app.add_subcommand("emulate", "Emulate a compiled program and optionally sample shots");
  int shots = 0;
  std::uint64_t seed = 1;
  double p00 = 0.99, p11 = 0.93;
  emulate_cmd->add_option("--schedule", schedule_path, "Schedule or program JSON")->required();
  emulate_cmd->add_flag("--no-eta", no_eta, "Place atoms with eta = 1");
  emulate_cmd->add_option("--target", target, "Report P(target): half, mis or a bitstring");
  emulate_cmd->add_option("--shots", shots, "Sample this many noisy shots")->check(CLI::NonNegativeNumber);
  emulate_cmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  emulate_cmd->add_option("--p00", p00, "P(read 0 | 0)")->capture_default_str();
  emulate_cmd->add_option("--p11", p11, "P(read 1 | 1)")->capture_default_str();
  emulate_cmd->add_option("--out", out, "Shot file path");

  // mitigate
  auto* mitigate = app.add_subcommand("mitigate", "EM reconstruction of a shot file");
  std::string shots_path;
  bool bracelet = false;
  int resamples = 1000;
  int workers = 1;
  mitigate->add_option("--shots", shots_path, "Shot file")->required();
  mitigate->add_option("--target", target, "half, mis or a bitstring")->capture_default_str();
  mitigate->add_flag("--bracelet", bracelet, "Target the whole dihedral orbit");
  mitigate->add_option("--resamples", resamples, "Bootstrap resamples")->check(CLI::Range(10, 1000000))->capture_default_str();
  mitigate->add_option("--seed", seed, "Bootstrap seed")->capture_default_str();
  mitigate->add_option("--workers", workers, "Bootstrap threads")->check(CLI::PositiveNumber);
  mitigate->add_option("--out", out, "Reconstruction JSON path");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Fit A = c |V|^alpha to a CSV of subspace_size,amplification");
  std::string csv_path;
  std::string weights = "relative";
  analyze->add_option("--input", csv_path, "CSV with subspace_size and amplification columns")->required();
  analyze->add_option("--weights", weights, "relative, unit or sigma (third CSV column)")
      ->check(CLI::IsMember({"relative", "unit", "sigma"}))
      ->capture_default_str();
  analyze->add_option("--out", out, "Fit JSON path");

  // quench
  auto* quench_cmd = app.add_subcommand("quench", "Coherent and incoherent quench traces");
  double tau_max = 8.0, dtau = 0.02;
  std::string mode = "both";
  std::string backend = "ctqw";
  quench_cmd->add_option("--ring", ring, "Ring size N")->required()->check(CLI::Range(3, kMaxVertices));
  quench_cmd->add_option("--target", target, "half, mis or a bitstring")->capture_default_str();
  quench_cmd->add_option("--tau-max", tau_max, "Largest quench time")->capture_default_str();
  quench_cmd->add_option("--dtau", dtau, "Grid spacing")->capture_default_str();
  quench_cmd->add_option("--mode", mode, "coherent, incoherent or both")
      ->check(CLI::IsMember({"coherent", "incoherent", "both"}))
      ->capture_default_str();
  quench_cmd->add_option("--backend", backend, "ctqw or rydberg")->check(CLI::IsMember({"ctqw", "rydberg"}))->capture_default_str();
  quench_cmd->add_option("--out", out, "CSV path");

  // run
  auto* run = app.add_subcommand("run", "Run a config-driven experiment");
  std::string config_path;
  std::optional<int> run_workers;
  std::optional<std::uint64_t> run_seed;
  std::vector<std::string> run_backends;
  run->add_option("--config", config_path, "Experiment config JSON")->required();
  run->add_option("--out", out, "Output directory (overrides the config)");
  run->add_option("--workers", run_workers, "Instance-level worker threads");
  run->add_option("--seed", run_seed, "Master seed (overrides the config)");
  run->add_option("--backend", run_backends, "Backends (overrides the config)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*enumerate) {
      const auto basis = enumerate_subspace(ring_graph(ring));
      const auto orbits = orbit_partition(basis);
      std::cout << "N=" << ring << " |V|=" << basis.size() << " orbits=" << orbits.size() << '\n';
      if (list) {
        for (const auto& o : orbits) std::cout << format_bits(o.representative, ring) << ' ' << o.size() << '\n';
      }
    } else if (*prep_product) {
      const Bitstring z = named_target(target, ring);
      auto basis = make_basis(ring_graph(ring));
      WalkGenerator gen(basis);
      Json summary{{"n", ring}, {"subspace_size", basis->size()}, {"target", format_bits(z, ring)}, {"p", depth}};
      double t0 = 0.0, t1 = 0.0, success = 0.0;
      if (tau0 || tau1) {
        if (!tau0 || !tau1) throw Error(ErrorKind::validation, "--tau0 and --tau1 go together");
        t0 = *tau0;
        t1 = *tau1;
        success = product_success(gen, z, depth, t0, t1);
      } else {
        const auto r = optimize_product(gen, z, depth);
        t0 = r.tau0;
        t1 = r.tau1;
        success = r.success;
        summary["seed"] = {r.seed.tau0, r.seed.tau1};
        summary["seed_fallback"] = r.seed_fallback;
        summary["converged"] = r.converged;
      }
      summary["tau0"] = t0;
      summary["tau1"] = t1;
      summary["success"] = success;
      summary["j_eff"] = table_effective_coupling(depth, t0, t1);
      summary["amplification"] = amplification(static_cast<double>(basis->size()), success).amplification;
      if (!out.empty()) emit(out, schedule_to_json(product_schedule(z, ring, depth, t0, t1), ring).dump(2) + "\n");
      std::cout << summary.dump(2) << '\n';
    } else if (*prep_bracelet) {
      auto basis = make_basis(ring_graph(ring));
      BraceletSector sector(basis);
      const auto orbit = dihedral_orbit(named_target(target, ring), ring);
      BraceletPlan plan;
      if (tau_eff) {
        plan = plan_from_table(*tau_eff, gamma);
        plan.success = bracelet_success(sector, orbit.representative, plan.tau, plan.gamma);
      } else {
        const auto search = optimize_bracelet(sector, orbit.representative);
        if (!search.best) throw Error(ErrorKind::plan_infeasible, "no feasible peak");
        plan = *search.best;
      }
      Json summary{{"n", ring},
                   {"subspace_size", basis->size()},
                   {"representative", format_bits(orbit.representative, ring)},
                   {"orbit_size", orbit.size()},
                   {"p", plan.p},
                   {"tau", plan.tau},
                   {"tau_eff", plan.tau_eff()},
                   {"gamma", plan.gamma},
                   {"success", plan.success},
                   {"amplification", amplification(static_cast<double>(basis->size()), plan.success).amplification}};
      if (!out.empty()) emit(out, schedule_to_json(bracelet_schedule(plan), ring).dump(2) + "\n");
      std::cout << summary.dump(2) << '\n';
    } else if (*compile) {
      int n = 0;
      const auto schedule = load_schedule(schedule_path, n);
      CompileOptions opts;
      opts.layout.use_eta = !no_eta;
      opts.layout.scale = scale;
      const auto program = compile_program(schedule, n, {}, opts);
      for (const auto& w : program.warnings) std::cerr << "warning: " << w << '\n';
      emit(out, program_to_json(program).dump(2) + "\n");
    } else if (*emulate_cmd) {
      int n = 0;
      const auto schedule = load_schedule(schedule_path, n);
      CompileOptions opts;
      opts.layout.use_eta = !no_eta;
      const auto program = compile_program(schedule, n, {}, opts);
      const auto result = emulate(program);
      auto basis = make_basis(ring_graph(n));
      Json summary{{"n", n}, {"duration", program.duration}, {"steps", result.steps},
                   {"leakage", leakage(result.state, *basis)}};
      if (emulate_cmd->count("--target")) {
        const Bitstring z = named_target(target, n);
        summary["target"] = format_bits(z, n);
        summary["probability"] = basis_probability(result, z);
      }
      if (shots > 0) {
        ReadoutChannel channel{p00, p11};
        const auto set = sample_shots(result.state, n, shots, channel, seed);
        std::ostringstream os;
        write_shots(os, set);
        emit(out, os.str());
      }
      std::cerr << summary.dump() << '\n';
      if (shots == 0) std::cout << summary.dump(2) << '\n';
    } else if (*mitigate) {
      std::ifstream f(shots_path);
      if (!f) throw Error(ErrorKind::validation, "cannot open " + shots_path);
      const auto set = read_shots(f);
      auto basis = make_basis(ring_graph(set.n));
      const Bitstring z = named_target(target, set.n);
      std::vector<std::size_t> idx;
      if (bracelet) {
        idx = orbit_indices(dihedral_orbit(z, set.n), *basis);
      } else {
        const auto k = basis->index_of(z);
        if (!k) throw Error(ErrorKind::inconsistent_target, "target outside the subspace");
        idx.push_back(*k);
      }
      BootstrapOptions boot;
      boot.resamples = resamples;
      boot.seed = seed;
      boot.workers = workers;
      const auto result = reconstruct(set, *basis, set.channel, idx, boot);
      emit(out, reconstruction_to_json(result, *basis).dump(2) + "\n");
    } else if (*analyze) {
      std::istringstream in(read_file(csv_path));
      std::string line;
      std::vector<double> x, y, s;
      int line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#' || !(std::isdigit(static_cast<unsigned char>(line[0])) || line[0] == '.')) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        double a = 0.0, b = 0.0, c = 0.0;
        if (!(fields >> a >> b)) throw Error(ErrorKind::validation, csv_path + " line " + std::to_string(line_no));
        x.push_back(a);
        y.push_back(b);
        if (weights == "sigma") {
          if (!(fields >> c)) throw Error(ErrorKind::validation, csv_path + " line " + std::to_string(line_no) + ": missing sigma");
          s.push_back(c);
        }
      }
      const FitWeighting w = weights == "unit" ? FitWeighting::unit
                             : weights == "sigma" ? FitWeighting::explicit_sigma
                                                  : FitWeighting::relative;
      const auto fit = fit_power_law(x, y, w, s);
      Json j{{"points", x.size()},     {"weights", weights},        {"c", fit.c},
             {"c_error", fit.c_error}, {"alpha", fit.alpha},        {"alpha_error", fit.alpha_error},
             {"alpha_ci", {fit.alpha_low, fit.alpha_high}},          {"r_squared", fit.r_squared},
             {"speedup", fit.speedup_text()}, {"alpha_at_bound", fit.alpha_at_bound}};
      emit(out, j.dump(2) + "\n");
    } else if (*quench_cmd) {
      auto basis = make_basis(ring_graph(ring));
      const auto orbit = dihedral_orbit(named_target(target, ring), ring);
      const auto grid = tau_grid(tau_max, dtau);
      std::vector<std::pair<std::string, QuenchTrace>> traces;
      for (const std::string m : {"coherent", "incoherent"}) {
        if (mode != "both" && mode != m) continue;
        if (backend == "ctqw") {
          WalkGenerator gen(basis);
          traces.emplace_back(m, quench(orbit, gen, grid, m == "coherent" ? QuenchMode::coherent : QuenchMode::incoherent));
        } else {
          std::vector<Eigen::VectorXcd> prepared;
          if (m == "coherent") {
            prepared.push_back(embed_in_full_space(bracelet_vector(orbit, *basis), *basis));
          } else {
            for (Bitstring u : orbit.members) {
              Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << ring);
              v[static_cast<Eigen::Index>(u)] = 1.0;
              prepared.push_back(v);
            }
          }
          traces.emplace_back(m, quench_rydberg(prepared, orbit, grid));
        }
      }
      std::ostringstream os;
      os << "mode,tau,orbit_population,representative_population\n" << std::setprecision(12);
      for (const auto& [m, t] : traces) {
        for (std::size_t i = 0; i < t.tau.size(); ++i) {
          os << m << ',' << t.tau[i] << ',' << t.orbit_population[i] << ',' << t.representative_population[i] << '\n';
        }
      }
      emit(out, os.str());
    } else if (*run) {
      auto config = parse_config(read_file(config_path));
      if (!out.empty()) config.output = out;
      if (run_workers) config.workers = std::max(1, *run_workers);
      if (run_seed) config.seed = *run_seed;
      if (!run_backends.empty()) {
        config.backends.clear();
        for (const auto& b : run_backends) config.backends.push_back(parse_backend(b));
      }
      const auto result = run_experiment(config);
      write_experiment(config.output, config, result);
      int failed = 0;
      for (const auto& r : result.instances) {
        if (!r.error.empty()) {
          ++failed;
          std::cerr << "N=" << r.n << " " << r.target_name << " p=" << r.p << ": " << r.error << '\n';
        }
      }
      std::cout << "wrote " << config.output << " (" << result.instances.size() << " instances, " << failed
                << " failed)\n";
      if (failed > 0) return kExitRuntime;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_validation(e.kind()) ? kExitValidation : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
