#pragma once

#include "grover/core.hpp"

#include <cstdint>
#include <vector>

namespace grover {

/// C(N, r) at or above which marked sets are sampled instead of enumerated.
inline constexpr double kExhaustiveLimit = 1e5;
inline constexpr std::size_t kDefaultMarkedSamples = 2000;

enum class MarkedSelection {
  Auto,        // exhaustive when C(N, r) <= kExhaustiveLimit, sampled otherwise
  Exhaustive,  // ConfigError when C(N, r) > kExhaustiveLimit
  Sampled,     // distinct uniformly random r-subsets; exhaustive if samples >= C(N, r)
};

struct MarkedAverageOptions {
  MarkedSelection selection = MarkedSelection::Auto;
  std::size_t samples = kDefaultMarkedSamples;
  std::uint64_t seed = 0;
  long steps = -1;  // iterations per run; negative means tau(n, r)
  unsigned threads = 0;
};

struct MarkedAverage {
  int n = 0;
  Index r = 0;
  long steps = 0;
  bool exhaustive = false;
  std::size_t count = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double predicted = 0.0;  // N |a_bar|^2
  std::vector<double> per_set;
};

/// C(N, r) as a double (saturates to +inf).
double binomial(Index big_n, Index r);

/// Marked sets used by an average, in a deterministic order: lexicographic
/// when enumerated, draw order when sampled.
std::vector<std::vector<Index>> select_marked_sets(int n, Index r, const MarkedAverageOptions& options);

/// Mean of P(steps) over marked sets of size r, each run on the exact
/// simulator. The result does not depend on the thread count.
MarkedAverage average_over_marked_sets(const QuantumState& state, Index r,
                                       const MarkedAverageOptions& options = {});

}  // namespace grover
