#include "grover/analytic.hpp"
#include "grover/averaging.hpp"
#include "grover/harness.hpp"
#include "grover/io.hpp"
#include "grover/simulator.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

using namespace grover;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("grover_test_harness_" + name);
}

}  // namespace

TEST_CASE("named state builders") {
  const auto ghz = ghz_state(3);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(ghz[0] - h) < 1e-15);
  CHECK(std::abs(ghz[7] - h) < 1e-15);
  CHECK(ghz.amplitudes().segment(1, 6).cwiseAbs().maxCoeff() == 0.0);

  const auto w = w_state(3);
  const double t = 1.0 / std::sqrt(3.0);
  for (const Index i : {1, 2, 4}) CHECK(std::abs(w[i] - t) < 1e-15);
  for (const Index i : {0, 3, 5, 6, 7}) CHECK(std::abs(w[i]) == 0.0);

  const auto k = k_uniform_state(5, 7);
  for (Index i = 0; i < 32; ++i) {
    CHECK(std::abs(k[i] - (i < 7 ? 1.0 / std::sqrt(7.0) : 0.0)) < 1e-15);
  }
  CHECK(std::abs(basis_state(4, 9)[9] - 1.0) == 0.0);
  CHECK(std::abs(eta_state(4)[3] - 0.25) < 1e-15);

  CHECK(haar_state(6, 3).amplitudes() == haar_state(6, 3).amplitudes());
  CHECK(haar_state(6, 3).amplitudes() != haar_state(6, 4).amplitudes());

  CHECK_THROWS_AS(basis_state(3, 8), InvalidInput);
  CHECK_THROWS_AS(k_uniform_state(3, 0), InvalidInput);
  CHECK_THROWS_AS(k_uniform_state(3, 9), InvalidInput);
  CHECK_THROWS_AS(zero_mean_state(3, 5, 1), InvalidInput);
}

TEST_CASE("state specs") {
  const auto spec = parse_state_spec("basis:5");
  CHECK(spec.name == "basis");
  CHECK(spec.param == 5);
  CHECK_FALSE(parse_state_spec("ghz").param.has_value());
  CHECK(std::abs(build_state(spec, 3)[5] - 1.0) == 0.0);
  CHECK(build_state({"haar", 11, 0}, 4).amplitudes() == haar_state(4, 11).amplitudes());
  CHECK(build_state({"haar", std::nullopt, 11}, 4).amplitudes() == haar_state(4, 11).amplitudes());
  CHECK_THROWS_AS(build_state({"nope", std::nullopt, 0}, 3), InvalidInput);
  CHECK_THROWS_AS(parse_state_spec("basis:x"), InvalidInput);
  CHECK_THROWS_AS(build_state({"basis", std::nullopt, 0}, 3), InvalidInput);
  CHECK(resolve_state("w", 4).amplitudes() == w_state(4).amplitudes());
}

TEST_CASE("zero-mean states") {
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + trial % 5;
    const auto s = zero_mean_state(n, (Index{1} << n) / 2 - trial, 50 + trial);
    const Complex sum = s.amplitudes().sum();
    CHECK(std::abs(sum) < 1e-14);
    CHECK(averaged_success(s) < 1e-28);
    CHECK(averaged_success(s) < 10.0 / std::sqrt(double(s.dim())));
  }
}

TEST_CASE("marked-set selection") {
  CHECK(binomial(10, 3) == 120.0);
  CHECK(binomial(1024, 2) == 523776.0);

  MarkedAverageOptions options;
  const auto all = select_marked_sets(3, 2, options);
  REQUIRE(all.size() == 28);
  CHECK(all.front() == std::vector<Index>{0, 1});
  CHECK(all.back() == std::vector<Index>{6, 7});

  options.selection = MarkedSelection::Sampled;
  options.samples = 500;
  options.seed = 12;
  const auto drawn = select_marked_sets(8, 3, options);
  CHECK(drawn.size() == 500);
  std::set<std::vector<Index>> unique(drawn.begin(), drawn.end());
  CHECK(unique.size() == 500);
  for (const auto& m : drawn) {
    CHECK(std::is_sorted(m.begin(), m.end()));
    CHECK(m.back() < 256);
  }
  CHECK(select_marked_sets(8, 3, options) == drawn);

  options.samples = 5000;
  CHECK(select_marked_sets(3, 2, options).size() == 28);

  options.selection = MarkedSelection::Exhaustive;
  CHECK_THROWS_AS(select_marked_sets(10, 2, options), ConfigError);
}

TEST_CASE("sweeps over marked sets") {
  ExperimentConfig eta;
  eta.n = 8;
  eta.state_source = "eta";
  const auto s_eta = sweep_marked_sets(eta);
  CHECK(s_eta.average.exhaustive);
  CHECK(s_eta.average.count == 256);
  CHECK(s_eta.average.mean >= 0.99);
  CHECK(s_eta.tau == 12);

  ExperimentConfig ghz;
  ghz.n = 10;
  ghz.state_source = "ghz";
  const auto s_ghz = sweep_marked_sets(ghz);
  CHECK(s_ghz.average.exhaustive);
  CHECK(std::abs(s_ghz.average.mean - 2.0 / 1024) < 10.0 / 32.0);
  CHECK(std::abs(s_ghz.average.predicted - 2.0 / 1024) < 1e-14);

  ExperimentConfig haar;
  haar.n = 10;
  haar.state_source = "haar";
  haar.seed = 1;
  const auto r1 = sweep_marked_sets(haar);
  haar.r = 2;
  const auto r2 = sweep_marked_sets(haar);
  CHECK_FALSE(r2.average.exhaustive);
  CHECK(r2.average.count == kDefaultMarkedSamples);
  CHECK(std::abs(r1.average.mean - r2.average.mean) < 10.0 / 32.0);
}

TEST_CASE("sampled means agree with the exhaustive mean") {
  for (const std::uint64_t seed : {1u, 2u, 3u}) {
    const auto s = haar_state(6, 70 + seed);
    const auto exhaustive = average_over_marked_sets(s, 2);
    REQUIRE(exhaustive.exhaustive);
    MarkedAverageOptions options;
    options.selection = MarkedSelection::Sampled;
    options.samples = 300;
    options.seed = seed;
    const auto sampled = average_over_marked_sets(s, 2, options);
    CHECK_FALSE(sampled.exhaustive);
    CHECK(sampled.count == 300);
    CHECK(std::abs(sampled.mean - exhaustive.mean) < 3.0 * sampled.std_error);
  }
}

TEST_CASE("averages do not depend on the thread count") {
  const auto s = haar_state(7, 5);
  MarkedAverageOptions options;
  options.selection = MarkedSelection::Sampled;
  options.samples = 400;
  options.seed = 7;
  options.threads = 1;
  const auto one = average_over_marked_sets(s, 3, options);
  options.threads = 4;
  const auto four = average_over_marked_sets(s, 3, options);
  CHECK(one.per_set == four.per_set);
  CHECK(one.mean == four.mean);
  CHECK(one.std_error == four.std_error);

  ExperimentConfig config;
  config.n = 7;
  config.r = 3;
  config.state_source = "haar:5";
  config.seed = 7;
  config.samples = 400;
  config.selection = MarkedSelection::Sampled;
  config.threads = 1;
  const std::string a = to_json(sweep_marked_sets(config)).dump();
  config.threads = 3;
  CHECK(to_json(sweep_marked_sets(config)).dump() == a);
}

TEST_CASE("configuration errors") {
  ExperimentConfig config;
  config.n = 10;
  config.r = 2;
  config.state_source = "eta";
  CHECK_THROWS_AS(config.validate(), ConfigError);  // sampling needed but no seed
  config.seed = 1;
  CHECK_NOTHROW(config.validate());
  config.selection = MarkedSelection::Exhaustive;
  CHECK_THROWS_AS(config.validate(), ConfigError);

  ExperimentConfig range;
  range.n = 25;
  CHECK_THROWS_AS(range.validate(), InvalidInput);
  range.n = 3;
  range.r = 8;
  CHECK_THROWS_AS(range.validate(), InvalidInput);
  range.r = 1;
  range.t_max = -1;
  CHECK_THROWS_AS(range.validate(), InvalidInput);

  ExperimentConfig mismatch;
  mismatch.n = 3;
  mismatch.r = 2;
  mismatch.marked = std::vector<Index>{1};
  CHECK_THROWS_AS(mismatch.validate(), ConfigError);

  ExperimentConfig no_marked;
  no_marked.n = 3;
  CHECK_THROWS(compare_run(no_marked));
}

TEST_CASE("compare runs") {
  const auto eta = compare_run(eta_state(10), MarkedSet(10, {7}), 100);
  CHECK(eta.per_t.size() == 101);
  CHECK(eta.max_abs_err < 1e-10);
  CHECK(eta.params.tau == 25);

  ExperimentConfig ghz;
  ghz.n = 8;
  ghz.state_source = "ghz";
  ghz.marked = std::vector<Index>{0};
  const auto report = compare_run(ghz);
  CHECK(report.per_t.size() == static_cast<std::size_t>(4 * optimal_iterations(8, 1) + 1));
  CHECK(report.max_abs_err < 1e-10);

  Eigen::VectorXcd a(8);
  a << Complex(0.3, 0.1), Complex(-0.3, -0.1), 0.2, Complex(-0.5, 0.2), Complex(0.3, -0.2), 0.0,
      0.0, 0.0;
  const auto cycle = compare_run(QuantumState::renormalized(3, a), MarkedSet(3, {0, 1}), 20);
  CHECK(cycle.params.delta_p == 0.0);
  for (const auto& row : cycle.per_t) {
    CHECK(std::abs(row.p_sim - cycle.per_t[0].p_sim) < 1e-14);
    CHECK(row.abs_err < 1e-14);
  }
  CHECK(to_json(cycle).at("constant_p").get<bool>());
}

TEST_CASE("state files") {
  const auto path = temp_file("state.json");
  const auto s = haar_state(4, 2);
  save_state_file(s, path.string());
  const auto loaded = load_state_file(path.string());
  CHECK(loaded.amplitudes() == s.amplitudes());
  CHECK(resolve_state(path.string(), 4).amplitudes() == s.amplitudes());
  CHECK_THROWS_AS(resolve_state(path.string(), 5), InvalidInput);

  auto j = state_to_json(eta_state(2));
  j["amplitudes"][0][0] = 0.5 + 1e-10;  // within the file tolerance
  const auto nearly = state_from_json(j);
  CHECK(std::abs(nearly.norm() - 1.0) < 1e-15);
  j["amplitudes"][0][0] = 0.6;
  CHECK_THROWS_AS(state_from_json(j), InvalidInput);
  j["amplitudes"].erase(0);
  CHECK_THROWS_AS(state_from_json(j), InvalidInput);
  CHECK_THROWS_AS(state_from_json(nlohmann::json::parse(R"({"n": 1})")), InvalidInput);

  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_state_file(path.string()), InvalidInput);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_state_file(path.string()), InvalidInput);
}
