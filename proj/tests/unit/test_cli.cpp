#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "qwalk/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Output {
  int status = -1;
  std::string text;
};

Output run(const std::string& args) {
  const std::string cmd = std::string(QWALK_CLI) + " " + args + " 2>&1";
  Output out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.text.append(buf, got);
  const int raw = pclose(pipe);
  out.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / ("qwalk_cli_" + std::to_string(getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("enumerate") {
  const auto r = run("enumerate --ring 7");
  CHECK(r.status == 0);
  CHECK(r.text.find("N=7 |V|=29 orbits=5") != std::string::npos);
  CHECK(run("enumerate").status == 1);
  CHECK(run("no-such-command").status == 1);
}

TEST_CASE("bad configs exit with status 1 and name the problem") {
  const auto dir = scratch();
  std::ofstream(dir / "empty_depths.json") << R"({"schema": "qwalk.config/1", "ring": [5], "depths": []})";
  const auto r = run("run --config " + (dir / "empty_depths.json").string());
  CHECK(r.status == 1);
  CHECK(r.text.find("depths") != std::string::npos);
  std::ofstream(dir / "syntax.json") << "{\n\"ring\": [5,,]\n}";
  const auto s = run("run --config " + (dir / "syntax.json").string());
  CHECK(s.status == 1);
  CHECK(s.text.find("line 2") != std::string::npos);
}

TEST_CASE("prepare, compile, emulate and mitigate") {
  const auto dir = scratch();
  const auto sched = dir / "s.json", prog = dir / "p.json", shots = dir / "shots.txt", rec = dir / "r.json";
  CHECK(run("prep-product --ring 5 --target 00101 --depth 1 --out " + sched.string()).status == 0);
  const auto s = qwalk::Json::parse(slurp(sched));
  CHECK(s["schema"] == qwalk::kScheduleSchema);

  CHECK(run("compile --schedule " + sched.string() + " --out " + prog.string()).status == 0);
  const auto p = qwalk::Json::parse(slurp(prog));
  CHECK(p["schema"] == qwalk::kProgramSchema);
  CHECK(p["layout"]["positions"].size() == 5);

  CHECK(run("emulate --schedule " + sched.string() + " --target 00101 --shots 300 --seed 3 --out " + shots.string())
            .status == 0);
  CHECK(slurp(shots).rfind("# n=5 shots=300", 0) == 0);

  CHECK(run("mitigate --shots " + shots.string() + " --target 00101 --resamples 20 --out " + rec.string()).status == 0);
  const auto r = qwalk::Json::parse(slurp(rec));
  CHECK(r["schema"] == qwalk::kReconstructionSchema);
  for (const char* key : {"state", "probability", "ci", "out_of_subspace_mass", "iterations", "converged"}) {
    CHECK(r.contains(key));
  }
  CHECK(r["ci"][0].get<double>() <= r["probability"].get<double>());
  CHECK(r["probability"].get<double>() <= r["ci"][1].get<double>());

  CHECK(run("compile --schedule " + (dir / "missing.json").string()).status != 0);
}

TEST_CASE("runs are deterministic across worker counts") {
  const auto dir = scratch();
  std::ofstream(dir / "cfg.json") << R"({"schema": "qwalk.config/1", "ring": [5, 6, 7], "depths": [1],
    "backends": ["ctqw", "shots"], "shots": 300, "resamples": 20, "seed": 9})";
  const auto a = run("run --config " + (dir / "cfg.json").string() + " --workers 1 --out " + (dir / "a").string());
  const auto b = run("run --config " + (dir / "cfg.json").string() + " --workers 3 --out " + (dir / "b").string());
  CHECK(a.status == 0);
  CHECK(b.status == 0);
  CHECK(slurp(dir / "a" / "results.csv") == slurp(dir / "b" / "results.csv"));
  CHECK(slurp(dir / "a" / "fits.json") == slurp(dir / "b" / "fits.json"));
  const auto ma = qwalk::Json::parse(slurp(dir / "a" / "manifest.json"));
  const auto mb = qwalk::Json::parse(slurp(dir / "b" / "manifest.json"));
  CHECK(ma["config_hash"] == mb["config_hash"]);
  CHECK(slurp(dir / "a" / "results.csv").rfind("n,subspace_size,target,p,tau0,tau1,gamma,perfect", 0) == 0);
}

TEST_CASE("quench and analyze") {
  const auto dir = scratch();
  const auto q = run("quench --ring 6 --target 000101 --tau-max 1 --dtau 0.1 --mode both --out " +
                     (dir / "q.csv").string());
  CHECK(q.status == 0);
  CHECK(slurp(dir / "q.csv").rfind("mode,tau,orbit_population,representative_population", 0) == 0);

  std::ofstream(dir / "a.csv") << "subspace_size,amplification\n11,4.3\n18,6.1\n29,8.5\n47,11.9\n";
  const auto f = run("analyze --input " + (dir / "a.csv").string() + " --out " + (dir / "fit.json").string());
  CHECK(f.status == 0);
  const auto fit = qwalk::Json::parse(slurp(dir / "fit.json"));
  CHECK(fit.contains("alpha"));
  fs::remove_all(dir);
}
