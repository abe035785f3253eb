#include "grover/averaging.hpp"

#include "grover/analytic.hpp"
#include "grover/kernels.hpp"
#include "grover/parallel.hpp"
#include "grover/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace grover {

double binomial(Index big_n, Index r) {
  if (r < 0 || r > big_n) return 0.0;
  r = std::min(r, big_n - r);
  double out = 1.0;
  for (Index j = 1; j <= r; ++j) {
    out = out * static_cast<double>(big_n - r + j) / static_cast<double>(j);
    if (!std::isfinite(out)) return std::numeric_limits<double>::infinity();
  }
  return std::round(out);
}

namespace {

std::vector<std::vector<Index>> enumerate_subsets(Index big_n, Index r) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> combo(static_cast<std::size_t>(r));
  for (Index j = 0; j < r; ++j) combo[static_cast<std::size_t>(j)] = j;
  while (true) {
    out.push_back(combo);
    Index j = r - 1;
    while (j >= 0 && combo[static_cast<std::size_t>(j)] == big_n - r + j) --j;
    if (j < 0) break;
    ++combo[static_cast<std::size_t>(j)];
    for (Index k = j + 1; k < r; ++k) {
      combo[static_cast<std::size_t>(k)] = combo[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
  return out;
}

// Floyd's algorithm: a uniformly random r-subset of [0, N).
std::vector<Index> random_subset(Index big_n, Index r, Rng& rng) {
  std::set<Index> chosen;
  for (Index j = big_n - r; j < big_n; ++j) {
    const auto t = static_cast<Index>(rng.below(static_cast<std::uint64_t>(j + 1)));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

std::vector<std::vector<Index>> select_marked_sets(int n, Index r,
                                                   const MarkedAverageOptions& options) {
  const Index big_n = dimension_of(n);
  if (r < 1 || r >= big_n) throw InvalidInput("r must satisfy 1 <= r < N");
  const double total = binomial(big_n, r);
  const bool feasible = total <= kExhaustiveLimit;

  bool exhaustive = false;
  switch (options.selection) {
    case MarkedSelection::Auto:
      exhaustive = feasible;
      break;
    case MarkedSelection::Exhaustive:
      if (!feasible) {
        throw ConfigError("exhaustive enumeration of C(" + std::to_string(big_n) + ", " +
                          std::to_string(r) + ") marked sets exceeds the limit; use sampling");
      }
      exhaustive = true;
      break;
    case MarkedSelection::Sampled:
      exhaustive = static_cast<double>(options.samples) >= total;
      break;
  }
  if (exhaustive) return enumerate_subsets(big_n, r);

  if (options.samples == 0) throw ConfigError("sample count must be positive");
  Rng rng(mix_seed(options.seed, static_cast<std::uint64_t>(r)));
  std::set<std::vector<Index>> seen;
  std::vector<std::vector<Index>> out;
  out.reserve(options.samples);
  while (out.size() < options.samples) {
    auto subset = random_subset(big_n, r, rng);
    if (seen.insert(subset).second) out.push_back(std::move(subset));
  }
  return out;
}

MarkedAverage average_over_marked_sets(const QuantumState& state, Index r,
                                       const MarkedAverageOptions& options) {
  MarkedAverage out;
  out.n = state.n();
  out.r = r;
  out.steps = options.steps >= 0 ? options.steps : optimal_iterations(state.n(), r);
  out.predicted = averaged_success(state);

  const auto sets = select_marked_sets(state.n(), r, options);
  out.count = sets.size();
  out.exhaustive = static_cast<double>(out.count) == binomial(state.dim(), r);

  const long steps = out.steps;
  out.per_set = parallel_map(
      sets.size(),
      [&](std::size_t j) {
        Eigen::VectorXcd a = state.amplitudes();
        const std::span<const Index> marked(sets[j]);
        for (long t = 0; t < steps; ++t) kernels::grover_step(a, marked);
        return kernels::marked_probability(a, marked);
      },
      options.threads);

  double sum = 0.0;
  for (const double p : out.per_set) sum += p;
  out.mean = sum / static_cast<double>(out.count);
  if (out.count > 1) {
    double ss = 0.0;
    for (const double p : out.per_set) ss += (p - out.mean) * (p - out.mean);
    out.std_error = std::sqrt(ss / static_cast<double>(out.count - 1) /
                              static_cast<double>(out.count));
  }
  return out;
}

}  // namespace grover
