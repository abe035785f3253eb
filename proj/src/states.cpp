#include "grover/harness.hpp"

#include "grover/io.hpp"
#include "grover/rng.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>

namespace grover {

QuantumState eta_state(int n) {
  const Index dim = dimension_of(n);
  return QuantumState::renormalized(n, Eigen::VectorXcd::Ones(dim));
}

QuantumState basis_state(int n, Index i) {
  const Index dim = dimension_of(n);
  if (i < 0 || i >= dim) throw InvalidInput("basis index out of range");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  a(i) = 1.0;
  return QuantumState(n, std::move(a));
}

QuantumState ghz_state(int n) {
  const Index dim = dimension_of(n);
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  a(0) = 1.0;
  a(dim - 1) = 1.0;
  return QuantumState::renormalized(n, std::move(a));
}

QuantumState w_state(int n) {
  const Index dim = dimension_of(n);
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  for (int k = 0; k < n; ++k) a(Index{1} << k) = 1.0;
  return QuantumState::renormalized(n, std::move(a));
}

QuantumState k_uniform_state(int n, Index k) {
  const Index dim = dimension_of(n);
  if (k < 1 || k > dim) throw InvalidInput("k_uniform needs 1 <= k <= N");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  a.head(k).setOnes();
  return QuantumState::renormalized(n, std::move(a));
}

QuantumState zero_mean_state(int n, Index pairs, std::uint64_t seed) {
  const Index dim = dimension_of(n);
  if (pairs < 1 || 2 * pairs > dim) throw InvalidInput("zero_mean needs 1 <= pairs <= N/2");
  Rng rng(seed);
  std::vector<Index> order(static_cast<std::size_t>(dim));
  std::iota(order.begin(), order.end(), Index{0});
  for (Index i = dim - 1; i > 0; --i) {  // Fisher-Yates with the portable generator
    const auto j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  for (Index p = 0; p < pairs; ++p) {
    const Complex value = rng.complex_normal();
    a(order[static_cast<std::size_t>(2 * p)]) = value;
    a(order[static_cast<std::size_t>(2 * p + 1)]) = -value;
  }
  return QuantumState::renormalized(n, std::move(a));
}

QuantumState haar_state(int n, std::uint64_t seed) {
  const Index dim = dimension_of(n);
  Rng rng(seed);
  Eigen::VectorXcd a(dim);
  for (Index i = 0; i < dim; ++i) a(i) = rng.complex_normal();
  return QuantumState::renormalized(n, std::move(a));
}

StateSpec parse_state_spec(const std::string& text) {
  StateSpec spec;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (colon != std::string::npos) {
    const std::string arg = text.substr(colon + 1);
    try {
      std::size_t used = 0;
      spec.param = std::stoll(arg, &used);
      if (used != arg.size()) throw InvalidInput("");
    } catch (const std::exception&) {
      throw InvalidInput("state parameter must be an integer: '" + text + "'");
    }
  }
  return spec;
}

QuantumState build_state(const StateSpec& spec, int n) {
  const auto need = [&](const char* what) -> long long {
    if (!spec.param) throw InvalidInput("state '" + spec.name + "' needs " + what);
    return *spec.param;
  };
  if (spec.name == "eta") return eta_state(n);
  if (spec.name == "ghz") return ghz_state(n);
  if (spec.name == "w") return w_state(n);
  if (spec.name == "basis") return basis_state(n, need("a basis index"));
  if (spec.name == "k_uniform") return k_uniform_state(n, need("k"));
  if (spec.name == "zero_mean") {
    const Index pairs = spec.param ? *spec.param : dimension_of(n) / 2;
    return zero_mean_state(n, pairs, spec.seed);
  }
  if (spec.name == "haar") {
    if (spec.param && *spec.param < 0) throw InvalidInput("haar seed must be non-negative");
    return haar_state(n, spec.param ? static_cast<std::uint64_t>(*spec.param) : spec.seed);
  }
  throw InvalidInput("unknown state name '" + spec.name +
                     "' (expected eta, basis, ghz, w, zero_mean, haar, k_uniform)");
}

QuantumState resolve_state(const std::string& source, int n, std::uint64_t seed) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    QuantumState state = load_state_file(source);
    if (state.n() != n) {
      throw InvalidInput("state file has " + std::to_string(state.n()) + " qubits, --n is " +
                         std::to_string(n));
    }
    return state;
  }
  StateSpec spec = parse_state_spec(source);
  spec.seed = seed;
  return build_state(spec, n);
}

}  // namespace grover
