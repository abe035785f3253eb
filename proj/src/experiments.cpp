#include "grover/harness.hpp"

#include "grover/kernels.hpp"
#include "grover/simulator.hpp"

#include <cmath>

namespace grover {

void ExperimentConfig::validate() const {
  const Index dim = dimension_of(n);
  if (r < 1 || r >= dim) {
    throw InvalidInput("r must satisfy 1 <= r <= 2^n - 1, got " + std::to_string(r));
  }
  if (t_max && *t_max < 0) throw InvalidInput("step count must be non-negative");
  if (marked && static_cast<Index>(marked->size()) != r) {
    throw ConfigError("explicit marked set has " + std::to_string(marked->size()) +
                      " entries but r = " + std::to_string(r));
  }
  const double total = binomial(dim, r);
  const bool samples_needed =
      selection == MarkedSelection::Sampled ||
      (selection == MarkedSelection::Auto && total > kExhaustiveLimit);
  if (!marked && selection == MarkedSelection::Exhaustive && total > kExhaustiveLimit) {
    throw ConfigError("exhaustive enumeration is infeasible for C(N, r) = " +
                      std::to_string(total) + "; request sampling");
  }
  if (!marked && samples_needed && !seed) {
    throw ConfigError("marked-set sampling requires a seed");
  }
  if (!marked && samples_needed && samples == 0) throw ConfigError("sample count must be positive");
}

SweepSummary sweep_marked_sets(const ExperimentConfig& config) {
  config.validate();
  const QuantumState state = resolve_state(config.state_source, config.n, config.seed.value_or(0));

  MarkedAverageOptions options;
  options.selection = config.selection;
  options.samples = config.samples;
  options.seed = config.seed.value_or(0);
  options.threads = config.threads;

  SweepSummary out;
  out.config = config;
  out.tau = optimal_iterations(config.n, config.r);
  options.steps = out.tau;
  out.average = average_over_marked_sets(state, config.r, options);
  out.eta_overlap = eta_overlap(state);
  return out;
}

ComparisonReport compare_run(const QuantumState& state, const MarkedSet& marked, long t_max) {
  require_same_register(state, marked);
  if (t_max < 0) throw InvalidInput("step count must be non-negative");

  ComparisonReport report;
  report.n = state.n();
  report.marked.assign(marked.indices().begin(), marked.indices().end());
  report.params = compute_params(state, marked);

  Eigen::VectorXcd a = state.amplitudes();
  for (long t = 0; t <= t_max; ++t) {
    if (t > 0) kernels::grover_step(a, marked.indices());
    ComparisonRow row;
    row.t = t;
    row.p_sim = kernels::marked_probability(a, marked.indices());
    row.p_analytic = analytic_success(report.params, t);
    row.abs_err = std::abs(row.p_sim - row.p_analytic);
    report.max_abs_err = std::max(report.max_abs_err, row.abs_err);
    report.per_t.push_back(row);
  }
  return report;
}

ComparisonReport compare_run(const ExperimentConfig& config) {
  if (!config.marked) throw ConfigError("compare needs an explicit marked set");
  config.validate();
  const QuantumState state = resolve_state(config.state_source, config.n, config.seed.value_or(0));
  const MarkedSet marked(config.n, *config.marked);
  const long t_max = config.t_max.value_or(4 * optimal_iterations(config.n, marked.r()));
  return compare_run(state, marked, t_max);
}

}  // namespace grover
