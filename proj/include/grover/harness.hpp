#pragma once

#include "grover/analytic.hpp"
#include "grover/averaging.hpp"
#include "grover/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grover {

/// Named initial state. `param` is the builder's integer argument:
/// basis -> index, k_uniform -> k, zero_mean -> number of +/- pairs,
/// haar -> seed (falls back to `seed`).
struct StateSpec {
  std::string name;
  std::optional<long long> param;
  std::uint64_t seed = 0;
};

/// Builders: eta, basis, ghz, w, zero_mean, haar, k_uniform.
QuantumState build_state(const StateSpec& spec, int n);

/// Parses "name" or "name:param".
StateSpec parse_state_spec(const std::string& text);

/// `source` is a JSON state file if such a file exists, otherwise a state
/// name. A file's qubit count must agree with `n`.
QuantumState resolve_state(const std::string& source, int n, std::uint64_t seed = 0);

QuantumState eta_state(int n);
QuantumState basis_state(int n, Index i);
QuantumState ghz_state(int n);
QuantumState w_state(int n);
QuantumState k_uniform_state(int n, Index k);
/// `pairs` disjoint index pairs (i, j) with a_j = -a_i, random pairing and
/// complex Gaussian values; every other amplitude is zero, so a_bar = 0.
QuantumState zero_mean_state(int n, Index pairs, std::uint64_t seed);
/// Normalized vector of i.i.d. standard complex Gaussians.
QuantumState haar_state(int n, std::uint64_t seed);

struct ExperimentConfig {
  int n = 0;
  Index r = 1;
  std::string state_source = "eta";
  std::optional<std::vector<Index>> marked;  // explicit set for compare / simulate
  MarkedSelection selection = MarkedSelection::Auto;
  std::size_t samples = kDefaultMarkedSamples;
  std::optional<std::uint64_t> seed;
  std::optional<long> t_max;  // default 4 tau
  unsigned threads = 0;
  std::string output_path;

  /// Range checks for n, r, t_max and seed presence when sampling is possible.
  void validate() const;
};

struct SweepSummary {
  ExperimentConfig config;
  long tau = 0;
  MarkedAverage average;
  double eta_overlap = 0.0;
};

/// Simulates tau iterations for every selected marked set and reports the
/// mean P(tau), its standard error and the prediction N |a_bar|^2.
SweepSummary sweep_marked_sets(const ExperimentConfig& config);

struct ComparisonRow {
  long t = 0;
  double p_sim = 0.0;
  double p_analytic = 0.0;
  double abs_err = 0.0;
};

struct ComparisonReport {
  int n = 0;
  std::vector<Index> marked;
  AnalyticParams params;
  std::vector<ComparisonRow> per_t;
  double max_abs_err = 0.0;
};

/// Exact simulation against the closed form for t = 0..t_max.
ComparisonReport compare_run(const ExperimentConfig& config);
ComparisonReport compare_run(const QuantumState& state, const MarkedSet& marked, long t_max);

}  // namespace grover
