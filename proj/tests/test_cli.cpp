#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "grover_test_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_of(const std::string& name) { return (work_dir() / name).string(); }

// Runs the CLI with stdout captured to `stdout_file` and stderr discarded.
int run(const std::string& args, const std::string& stdout_file = "stdout.txt") {
  const std::string cmd = std::string("\"") + GROVER_CLI_PATH + "\" " + args + " > \"" +
                          path_of(stdout_file) + "\" 2> \"" + path_of("stderr.txt") + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) { return json::parse(slurp(path)); }

}  // namespace

TEST_CASE("state make") {
  const auto out = path_of("ghz3.json");
  REQUIRE(run("state make ghz --n 3 --out " + out) == 0);
  const auto j = read_json(out);
  CHECK(j.at("n") == 3);
  CHECK(j.at("amplitudes").size() == 8);
  CHECK(std::abs(j["amplitudes"][7][0].get<double>() - 1.0 / std::sqrt(2.0)) < 1e-15);

  CHECK(run("state make haar --n 4 --seed 5 --out " + path_of("haar4.json")) == 0);
  CHECK(run("state make basis --n 3 --k 6 --out " + path_of("basis.json")) == 0);
  CHECK(run("state make zero_mean --n 4 --k 3 --seed 1 --out " + path_of("zm.json")) == 0);

  CHECK(run("state make haar --n 4 --out " + path_of("x.json")) == 3);
  CHECK(run("state make nonsense --n 3 --out " + path_of("x.json")) == 2);
  CHECK(run("state make ghz --n 0 --out " + path_of("x.json")) == 2);
  CHECK(run("state make ghz --out " + path_of("x.json")) == 2);
  CHECK(run("state make basis --n 3 --k 9 --out " + path_of("x.json")) == 2);
}

TEST_CASE("simulate") {
  const auto out = path_of("traj.csv");
  REQUIRE(run("simulate --state eta --n 10 --marked 7 --steps 25 --out " + out) == 0);
  std::istringstream csv(slurp(out));
  std::string line, last;
  std::getline(csv, line);
  CHECK(line == "t,p_marked,abar_m_re,abar_m_im,abar_u_re,abar_u_im,sigma_m,sigma_u");
  int rows = 0;
  while (std::getline(csv, line)) {
    last = line;
    ++rows;
  }
  CHECK(rows == 26);
  CHECK(last.rfind("25,", 0) == 0);
  CHECK(std::stod(last.substr(3)) >= 0.999);

  REQUIRE(run("simulate --state ghz --n 3 --marked 0,7 --steps 2 --full-snapshots --out " +
              path_of("snap.csv")) == 0);
  const auto snaps = read_json(path_of("snap.csv") + ".snapshots.json");
  CHECK(snaps.size() == 3);
  CHECK(snaps[2].at("t") == 2);

  // State files are loaded and validated.
  REQUIRE(run("state make w --n 4 --out " + path_of("w4.json")) == 0);
  CHECK(run("simulate --state " + path_of("w4.json") + " --n 4 --marked 1 --steps 3 --out " +
            path_of("w.csv")) == 0);
  CHECK(run("simulate --state " + path_of("w4.json") + " --n 5 --marked 1 --steps 3 --out " +
            path_of("w.csv")) == 2);
  {
    std::ofstream bad(path_of("bad_norm.json"));
    bad << R"({"n": 1, "amplitudes": [[0.9, 0], [0.1, 0]]})";
  }
  CHECK(run("simulate --state " + path_of("bad_norm.json") + " --n 1 --marked 0 --steps 1 --out " +
            path_of("b.csv")) == 2);

  CHECK(run("simulate --state eta --n 3 --marked 8 --steps 2 --out " + path_of("x.csv")) == 2);
  CHECK(run("simulate --state eta --n 3 --marked 1,1 --steps 2 --out " + path_of("x.csv")) == 2);
  CHECK(run("simulate --state eta --n 3 --marked a --steps 2 --out " + path_of("x.csv")) == 2);
  CHECK(run("simulate --state eta --n 3 --marked 1 --steps -1 --out " + path_of("x.csv")) == 2);
}

TEST_CASE("compare") {
  const auto out = path_of("cmp.json");
  REQUIRE(run("compare --state eta --n 10 --marked 7 --steps 100 --out " + out) == 0);
  const auto j = read_json(out);
  CHECK(j.at("max_abs_err").get<double>() < 1e-10);
  CHECK(j.at("per_t").size() == 101);
  CHECK(j.at("tau") == 25);
  CHECK(j.at("marked") == json::array({7}));
}

TEST_CASE("avg-success") {
  const auto out = path_of("avg.json");
  REQUIRE(run("avg-success --state ghz --n 6 --r 1 --out " + out) == 0);
  const auto j = read_json(out);
  CHECK(j.at("exhaustive") == true);
  CHECK(j.at("count") == 64);
  CHECK(std::abs(j.at("predicted").get<double>() - 2.0 / 64) < 1e-14);

  REQUIRE(run("avg-success --state haar:3 --n 6 --r 2 --samples 100 --seed 7 --out " + out) == 0);
  CHECK(read_json(out).at("count") == 100);
  CHECK(read_json(out).at("seed") == 7);

  CHECK(run("avg-success --state eta --n 10 --r 2 --out " + out) == 3);
  CHECK(run("avg-success --state eta --n 6 --r 2 --samples 100 --out " + out) == 3);
  CHECK(run("avg-success --state eta --n 6 --r 64 --out " + out) == 2);
}

TEST_CASE("classify") {
  REQUIRE(run("classify --state eta --n 4 --marked 0,5,10,15", "cls.json") == 0);
  const auto j = read_json(path_of("cls.json"));
  CHECK(j.at("kind") == "PeriodicCycle");
  CHECK(j.at("period") == 6);
  CHECK(j.at("cycle_exact") == 6);
  CHECK(j.at("cycle_up_to_phase") == 3);
  CHECK(j.at("abar_m").size() == 2);
  CHECK(j.at("tol").get<double>() == 1e-9);

  REQUIRE(run("classify --state eta --n 10 --marked 7 --tol 1e-8 --max-period 10", "cls2.json") ==
          0);
  const auto g = read_json(path_of("cls2.json"));
  CHECK(g.at("kind") == "Generic");
  CHECK(g.at("period").is_null());
  CHECK(g.at("cycle_exact").is_null());
  CHECK(g.at("tol").get<double>() == 1e-8);

  CHECK(run("classify --state eta --n 4 --marked 1 --max-period 0") == 2);
}

TEST_CASE("groverian") {
  REQUIRE(run("groverian --state ghz --n 3 --oracle-check", "g.json") == 0);
  const auto j = read_json(path_of("g.json"));
  CHECK(std::abs(j.at("p_max").get<double>() - 0.5) < 1e-6);
  CHECK(std::abs(j.at("g").get<double>() - std::sqrt(0.5)) < 1e-6);
  CHECK(std::abs(j.at("oracle_p_max").get<double>() - 0.5) < 1e-6);
  CHECK(j.at("argmax").size() == 3);
  CHECK(j.at("argmax")[0].size() == 4);
  CHECK(j.at("restarts") == 32);

  REQUIRE(run("groverian --state eta --n 5 --restarts 4 --seed 2", "g2.json") == 0);
  CHECK(read_json(path_of("g2.json")).at("g").get<double>() < 1e-8);
  CHECK(run("groverian --state ghz --n 4 --oracle-check") == 2);
  CHECK(run("groverian --state ghz --n 3 --restarts 0") == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("simulate --n 3") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("identical runs produce identical files") {
  const std::string args = "avg-success --state haar:9 --n 7 --r 2 --samples 200 --seed 7 --out ";
  REQUIRE(run(args + path_of("d1.json")) == 0);
  REQUIRE(run(args + path_of("d2.json")) == 0);
  CHECK(slurp(path_of("d1.json")) == slurp(path_of("d2.json")));
}
