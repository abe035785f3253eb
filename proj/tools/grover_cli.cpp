// Command-line front end: state construction, simulation, closed-form
// comparison, marked-set averaging, classification and the Groverian measure.
//
// Exit codes: 0 success, 2 invalid input, 3 configuration error.

#include "grover/analytic.hpp"
#include "grover/dynamics.hpp"
#include "grover/groverian.hpp"
#include "grover/harness.hpp"
#include "grover/io.hpp"
#include "grover/simulator.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitConfigError = 3;

std::vector<grover::Index> parse_marked(const std::string& csv) {
  std::vector<grover::Index> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw grover::InvalidInput("bad marked index '" + item + "'");
    }
  }
  if (out.empty()) throw grover::InvalidInput("--marked needs at least one index");
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw grover::ConfigError("cannot write output file '" + path + "'");
  return out;
}

struct Options {
  std::string name;
  std::string state = "eta";
  std::string marked;
  std::string out;
  int n = 0;
  long long k = -1;
  long long r = 1;
  long steps = 0;
  long max_period = 100;
  int restarts = 32;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tol = grover::kDefaultClassifyTolerance;
  double cycle_tol = grover::kDefaultCycleTolerance;
  bool full_snapshots = false;
  bool oracle_check = false;
};

void run_state_make(const Options& o, bool has_seed) {
  grover::StateSpec spec{o.name, std::nullopt, o.seed};
  if (o.k >= 0) spec.param = o.k;
  if (o.name == "haar" && !spec.param && !has_seed) {
    throw grover::ConfigError("haar state needs --seed");
  }
  grover::save_state_file(grover::build_state(spec, o.n), o.out);
}

void run_simulate(const Options& o) {
  const auto state = grover::resolve_state(o.state, o.n, o.seed);
  const grover::MarkedSet marked(o.n, parse_marked(o.marked));
  const auto trajectory = grover::evolve(state, marked, o.steps, o.full_snapshots);
  auto out = open_output(o.out);
  grover::write_trajectory_csv(out, trajectory);
  if (o.full_snapshots) {
    nlohmann::json snaps = nlohmann::json::array();
    for (const auto& step : trajectory.steps) {
      auto j = grover::state_to_json(*step.state);
      j["t"] = step.t;
      snaps.push_back(std::move(j));
    }
    grover::write_json_file(snaps, o.out + ".snapshots.json");
  }
}

void run_compare(const Options& o) {
  grover::ExperimentConfig config;
  config.n = o.n;
  config.state_source = o.state;
  config.marked = parse_marked(o.marked);
  config.r = static_cast<grover::Index>(config.marked->size());
  config.t_max = o.steps;
  config.seed = o.seed;
  const auto report = grover::compare_run(config);
  grover::write_json_file(grover::to_json(report), o.out);
}

void run_avg_success(const Options& o, bool has_samples, bool has_seed) {
  grover::ExperimentConfig config;
  config.n = o.n;
  config.r = o.r;
  config.state_source = o.state;
  if (has_samples) {
    config.selection = grover::MarkedSelection::Sampled;
    config.samples = o.samples;
  }
  if (has_seed) config.seed = o.seed;
  config.output_path = o.out;
  const auto summary = grover::sweep_marked_sets(config);
  grover::write_json_file(grover::to_json(summary), o.out);
}

void run_classify(const Options& o) {
  const auto state = grover::resolve_state(o.state, o.n, o.seed);
  const grover::MarkedSet marked(o.n, parse_marked(o.marked));
  const auto cls = grover::classify(state, marked, o.tol);
  auto j = grover::to_json(cls, o.tol);
  const auto exact = grover::detect_cycle(state, marked, o.max_period, o.cycle_tol);
  const auto projective = grover::detect_cycle_up_to_phase(state, marked, o.max_period, o.cycle_tol);
  j["cycle_exact"] = exact ? nlohmann::json(*exact) : nlohmann::json(nullptr);
  j["cycle_up_to_phase"] = projective ? nlohmann::json(*projective) : nlohmann::json(nullptr);
  j["cycle_tol"] = o.cycle_tol;
  std::cout << j.dump(2) << '\n';
}

void run_groverian(const Options& o) {
  const auto state = grover::resolve_state(o.state, o.n, o.seed);
  grover::GroverianOptions options;
  options.restarts = o.restarts;
  options.seed = o.seed;
  const auto result = grover::optimize_product(state, options);
  auto j = grover::to_json(result, o.n);
  if (o.oracle_check) {
    constexpr int kResolution = 200;
    j["oracle_resolution"] = kResolution;
    j["oracle_p_max"] = grover::grid_search_oracle(state, kResolution);
  }
  std::cout << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover search from arbitrary initial states"};
  app.require_subcommand(1);
  Options o;

  auto* state_cmd = app.add_subcommand("state", "Build initial states");
  state_cmd->require_subcommand(1);
  auto* make = state_cmd->add_subcommand("make", "Write a named state to a JSON file");
  make->add_option("name", o.name, "eta, basis, ghz, w, zero_mean, haar, k_uniform")->required();
  make->add_option("--n", o.n, "qubit count")->required();
  make->add_option("--k", o.k, "basis index, k for k_uniform, pair count for zero_mean");
  auto* make_seed = make->add_option("--seed", o.seed, "seed for haar / zero_mean");
  make->add_option("--out", o.out)->required();

  auto* simulate = app.add_subcommand("simulate", "Iterate U_G and write a trajectory CSV");
  simulate->add_option("--state", o.state, "state file or name[:param]")->required();
  simulate->add_option("--n", o.n)->required();
  simulate->add_option("--marked", o.marked, "comma-separated marked indices")->required();
  simulate->add_option("--steps", o.steps)->required();
  simulate->add_flag("--full-snapshots", o.full_snapshots, "also write every state");
  simulate->add_option("--out", o.out)->required();

  auto* compare = app.add_subcommand("compare", "Simulation versus closed form");
  compare->add_option("--state", o.state)->required();
  compare->add_option("--n", o.n)->required();
  compare->add_option("--marked", o.marked)->required();
  compare->add_option("--steps", o.steps)->required();
  compare->add_option("--out", o.out)->required();

  auto* avg = app.add_subcommand("avg-success", "Average P(tau) over marked sets");
  avg->add_option("--state", o.state)->required();
  avg->add_option("--n", o.n)->required();
  avg->add_option("--r", o.r)->required();
  auto* avg_samples = avg->add_option("--samples", o.samples, "sample marked sets");
  auto* avg_seed = avg->add_option("--seed", o.seed);
  avg->add_option("--out", o.out)->required();

  auto* classify = app.add_subcommand("classify", "Fixed point / cycle classification");
  classify->add_option("--state", o.state)->required();
  classify->add_option("--n", o.n)->required();
  classify->add_option("--marked", o.marked)->required();
  classify->add_option("--tol", o.tol, "moment tolerance");
  classify->add_option("--cycle-tol", o.cycle_tol, "return-overlap tolerance");
  classify->add_option("--max-period", o.max_period);

  auto* groverian = app.add_subcommand("groverian", "Groverian entanglement measure");
  groverian->add_option("--state", o.state)->required();
  groverian->add_option("--n", o.n)->required();
  groverian->add_option("--restarts", o.restarts);
  groverian->add_option("--seed", o.seed);
  groverian->add_flag("--oracle-check", o.oracle_check, "compare with the grid oracle (n <= 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (*make) {
      run_state_make(o, make_seed->count() > 0);
    } else if (*simulate) {
      run_simulate(o);
    } else if (*compare) {
      run_compare(o);
    } else if (*avg) {
      run_avg_success(o, avg_samples->count() > 0, avg_seed->count() > 0);
    } else if (*classify) {
      run_classify(o);
    } else if (*groverian) {
      run_groverian(o);
    }
  } catch (const grover::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const grover::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return 0;
}
