// Copyright 2026 The dramcontend Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dramcontend");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dramcontend::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path operator/(const std::string& leaf) const { return path / leaf; }
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("run writes summary and series") {
    TempDir dir("dramcontend_cli_run");
    const auto r = cli({"run", "--mode", "navigate", "--benchmark", "1K", "--workload", "256K", "--attackers", "1",
                        "--reps", "2", "--out", dir.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("victim_total") != std::string::npos);
    const auto summary = slurp(dir / "summary.csv");
    CHECK(summary.rfind("run_id,mode,op,benchmark_bytes", 0) == 0);
    CHECK(summary.find("\n0,navigate,write,1024,262144,1,2,fcfs,") != std::string::npos);
    const auto series = slurp(dir / "series_0.csv");
    CHECK(series.rfind("run_id,iteration,victim_cycles_mean\n0,0,", 0) == 0);
    CHECK(std::count(series.begin(), series.end(), '\n') == 256);
    CHECK_FALSE(fs::exists(dir / "trace_0.csv"));
  }

  TEST_CASE("run flags reach the config") {
    TempDir dir("dramcontend_cli_flags");
    const auto r = cli({"run", "--mode", "bomb", "--workload", "512K", "--attackers", "3", "--reps", "1", "--policy",
                        "frfcfs", "--timing", "22,22,22", "--refresh", "7800,300", "--seed", "9", "--op", "read",
                        "--sync", "free", "--tie-noise", "--iterations", "20", "--trace", "--out",
                        dir.path.string()});
    REQUIRE(r.code == 0);
    const auto summary = slurp(dir / "summary.csv");
    CHECK(summary.find("0,bomb,read,1024,524288,3,1,frfcfs,free,1,9,22,22,22,4,7800,300,20,") != std::string::npos);
    const auto trace = slurp(dir / "trace_0.csv");
    CHECK(std::count(trace.begin(), trace.end(), '\n') == 1 + 4 * 20);
  }

  TEST_CASE("run with a config file and flag override") {
    TempDir dir("dramcontend_cli_cfg");
    write(dir / "c.yaml", "experiment:\n  workload: 512K\n  attackers: 2\n  repetitions: 1\noutput:\n  dir: " +
                              (dir / "from_config").string() + "\n");
    const auto r = cli({"run", "--config", (dir / "c.yaml").string(), "--attackers", "3"});
    REQUIRE(r.code == 0);
    const auto summary = slurp(dir / "from_config" / "summary.csv");
    CHECK(summary.find("0,navigate,write,1024,524288,3,1,") != std::string::npos);
  }

  TEST_CASE("run errors") {
    auto r = cli({"run", "--mode", "bomb", "--attackers", "8", "--out", "/tmp/dramcontend_cli_never"});
    CHECK(r.code == 1);
    CHECK(r.err.find("attackers exceeds rows available (max 7)") != std::string::npos);
    CHECK_FALSE(fs::exists("/tmp/dramcontend_cli_never"));

    r = cli({"run", "--bogus"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--bogus") != std::string::npos);
    for (const char* flag : {"--mode", "--benchmark", "--workload", "--attackers", "--reps", "--policy", "--timing",
                             "--refresh", "--seed", "--out", "--config"}) {
      CHECK(r.err.find(flag) != std::string::npos);
    }

    CHECK(cli({"run", "--timing", "19,19"}).code == 1);
    CHECK(cli({"run", "--benchmark", "3K"}).code == 1);
    CHECK(cli({"run", "--policy", "lifo"}).code == 1);
    CHECK(cli({"run", "--config", "/nonexistent/c.yaml"}).code == 2);
    CHECK(cli({"run", "--reps", "1", "--out", "/proc/nope"}).code == 2);
    CHECK(cli({}).code == 1);
    CHECK(cli({"explode"}).code == 1);
    CHECK(cli({"--help"}).code == 0);
  }

  TEST_CASE("decompose prints one csv line") {
    CHECK(cli({"decompose", "16384"}).out == "16384,0,0,0,0,1,0\n");
    CHECK(cli({"decompose", "128K"}).out == "131072,1,0,0,0,0,0\n");
    CHECK(cli({"decompose", "1M"}).out == "1048576,0,0,0,0,8,0\n");
    CHECK(cli({"decompose", "5500"}).out == "5500,0,1,1,5,0,380\n");
    const auto r = cli({"decompose", "8G"});
    CHECK(r.code == 1);
    CHECK(r.err.find("8589934592") != std::string::npos);

    TempDir dir("dramcontend_cli_decompose");
    write(dir / "g.yaml", "geometry:\n  interleave_mode: LowOrder\n");
    CHECK(cli({"decompose", "1K", "--config", (dir / "g.yaml").string()}).out == "1024,1,0,0,0,0,0\n");
  }

  TEST_CASE("sweep isolates a bad point") {
    TempDir dir("dramcontend_cli_sweep");
    write(dir / "grid.yaml",
          "experiment:\n  repetitions: 1\n  iterations: 10\ngrid:\n"
          "  - {benchmark: 1K, workload: 256K}\n"
          "  - {benchmark: 1K, workload: 512K}\n"
          "  - {benchmark: 4K, workload: 1M}\n"
          "  - {benchmark: 4K, workload: 2M}\n"
          "  - {benchmark: 8K, workload: 2M}\n"
          "  - {benchmark: 3K, workload: 2M}\n"
          "  - {benchmark: 16K, workload: 2M}\n"
          "  - {benchmark: 16K, workload: 4M}\n");
    const auto r = cli({"sweep", "--config", (dir / "grid.yaml").string(), "--out", dir.path.string()});
    CHECK(r.code == 0);
    const auto summary = slurp(dir / "summary.csv");
    CHECK(std::count(summary.begin(), summary.end(), '\n') == 1 + 7);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    CHECK(r.err.find("point 5") != std::string::npos);
    CHECK(r.out.find("[6/8]") != std::string::npos);
    CHECK(fs::exists(dir / "series_7.csv"));
    CHECK_FALSE(fs::exists(dir / "series_5.csv"));
  }

  TEST_CASE("sweep failures and missing grid") {
    TempDir dir("dramcontend_cli_sweep_bad");
    write(dir / "bad.yaml", "grid:\n  - {benchmark: 3K}\n");
    CHECK(cli({"sweep", "--config", (dir / "bad.yaml").string(), "--out", dir.path.string()}).code == 1);
    write(dir / "nogrid.yaml", "experiment:\n  repetitions: 1\n");
    const auto r = cli({"sweep", "--config", (dir / "nogrid.yaml").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("grid") != std::string::npos);
    CHECK(cli({"sweep"}).code == 1);
  }

  TEST_CASE("single-point sweep equals run") {
    TempDir dir("dramcontend_cli_single");
    write(dir / "one.yaml", "experiment:\n  repetitions: 2\ngrid:\n  - {workload: 512K, attackers: 3}\n");
    REQUIRE(cli({"sweep", "--config", (dir / "one.yaml").string(), "--out", (dir / "s").string()}).code == 0);
    REQUIRE(cli({"run", "--workload", "512K", "--attackers", "3", "--reps", "2", "--out", (dir / "r").string()})
                .code == 0);
    CHECK(slurp(dir / "s" / "summary.csv") == slurp(dir / "r" / "summary.csv"));
    CHECK(slurp(dir / "s" / "series_0.csv") == slurp(dir / "r" / "series_0.csv"));
  }

  TEST_CASE("compare") {
    TempDir dir("dramcontend_cli_compare");
    const std::string header =
        "run_id,mode,op,benchmark_bytes,workload_bytes,attackers,repetitions,policy,sync,tie_noise,seed,cas_cycles,"
        "rcd_cycles,rp_cycles,bus_transfer_cycles,refresh_interval_cycles,refresh_duration_cycles,nsamples,samples,"
        "victim_iterations,victim_total_cycles,victim_mean_cycles,victim_max_cycles,victim_p99_cycles,"
        "victim_stddev_cycles,conflict_count,hit_count,open_count\n";
    auto row = [](const char* mode, int attackers, const char* total) {
      return std::string("0,") + mode + ",write,1024,524288," + std::to_string(attackers) +
             ",100,fcfs,lockstep,0,0,19,19,19,4,0,350,511,51200,51100," + total + ",1.0,61,61,1.0,0,0,0\n";
    };
    write(dir / "nav.csv", header + row("navigate", 1, "318212.000") + row("navigate", 7, "384698.000"));
    write(dir / "bomb.csv", header + row("bomb", 1, "509268.000") + row("bomb", 7, "970364.000"));
    auto r = cli({"compare", (dir / "nav.csv").string(), (dir / "bomb.csv").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("+60%") != std::string::npos);
    CHECK(r.out.find("+152%") != std::string::npos);
    CHECK(r.out.find("318212.000") != std::string::npos);

    r = cli({"compare", (dir / "nav.csv").string(), (dir / "nav.csv").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("+0%") != std::string::npos);

    write(dir / "other.csv", header + row("bomb", 2, "1.000") + row("bomb", 7, "2.000"));
    r = cli({"compare", (dir / "nav.csv").string(), (dir / "other.csv").string()});
    CHECK(r.code == 1);
    write(dir / "short.csv", header + row("bomb", 1, "1.000"));
    CHECK(cli({"compare", (dir / "nav.csv").string(), (dir / "short.csv").string()}).code == 1);

    std::string broken = header;
    broken.replace(broken.find("victim_total_cycles"), 19, "victim_sum");
    write(dir / "broken.csv", broken + row("bomb", 1, "1.000"));
    r = cli({"compare", (dir / "nav.csv").string(), (dir / "broken.csv").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("victim_total_cycles") != std::string::npos);

    CHECK(cli({"compare", (dir / "nav.csv").string(), (dir / "absent.csv").string()}).code == 2);
  }
}
