#include "grover/groverian.hpp"

#include "grover/averaging.hpp"
#include "grover/kernels.hpp"
#include "grover/parallel.hpp"
#include "grover/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace grover {

namespace {

void require_qubits(const QuantumState& state, int n) {
  if (state.n() != n) {
    throw InvalidInput("product state has " + std::to_string(n) + " qubits but the state has " +
                       std::to_string(state.n()));
  }
}

Eigen::VectorXcd conj_kron(const ProductState& product, int first, int last) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Ones(1);
  for (int k = first; k < last; ++k) {
    const Eigen::Vector2cd c = product.factor(k).conjugate();
    Eigen::VectorXcd next(out.size() * 2);
    for (Index h = 0; h < out.size(); ++h) {
      next(2 * h) = out(h) * c(0);
      next(2 * h + 1) = out(h) * c(1);
    }
    out.swap(next);
  }
  return out;
}

// Largest eigenvalue of W^dagger W for a 2 x 2 W, i.e. the best rank-1 overlap.
double top_singular_value_sq(const Eigen::Matrix2cd& w) {
  const double frob = w.squaredNorm();
  const double det = std::norm(w.determinant());
  return 0.5 * (frob + std::sqrt(std::max(0.0, frob * frob - 4.0 * det)));
}

Eigen::Vector2cd bloch_factor(double theta, double phi) {
  return {Complex(std::cos(theta / 2.0), 0.0), std::polar(std::sin(theta / 2.0), phi)};
}

struct RestartOutcome {
  std::vector<Eigen::Vector2cd> factors;
  double value = 0.0;
  int sweeps = 0;
  bool converged = false;
  std::vector<double> trace;
};

std::vector<Eigen::Vector2cd> basis_start(const QuantumState& state) {
  Index best = 0;
  state.amplitudes().cwiseAbs2().maxCoeff(&best);
  std::vector<Eigen::Vector2cd> factors;
  for (int k = 0; k < state.n(); ++k) {
    const bool one = (best >> (state.n() - 1 - k)) & 1;
    factors.emplace_back(one ? Complex{} : Complex{1.0}, one ? Complex{1.0} : Complex{});
  }
  return factors;
}

std::vector<Eigen::Vector2cd> random_start(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Eigen::Vector2cd> factors;
  for (int k = 0; k < n; ++k) {
    Eigen::Vector2cd c(rng.complex_normal(), rng.complex_normal());
    factors.push_back(c.normalized());
  }
  return factors;
}

RestartOutcome run_restart(const QuantumState& state, std::vector<Eigen::Vector2cd> start,
                           const GroverianOptions& options) {
  RestartOutcome out;
  ProductState product(std::move(start));
  double value = product_overlap(state, product);
  if (options.record_updates) out.trace.push_back(value);

  std::vector<Eigen::Vector2cd> factors = product.factors();
  for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    const double before = value;
    for (int k = 0; k < state.n(); ++k) {
      const Eigen::Vector2cd v = partial_contraction(state, ProductState(factors), k);
      const double norm = v.norm();
      if (norm > 0.0) {
        factors[static_cast<std::size_t>(k)] = v / norm;
        value = norm * norm;
      }
      if (options.record_updates) out.trace.push_back(value);
    }
    out.sweeps = sweep;
    if (value - before < options.tol) {
      out.converged = true;
      break;
    }
  }
  out.factors = std::move(factors);
  out.value = value;
  return out;
}

}  // namespace

ProductState::ProductState(std::vector<Eigen::Vector2cd> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (std::abs(f.squaredNorm() - 1.0) > kNormTolerance) {
      throw InvalidInput("product-state factor is not unit norm");
    }
  }
}

QuantumState ProductState::expand() const {
  return QuantumState::unitary_image(n(), kernels::kron_factors(factors_));
}

double product_overlap(const QuantumState& state, const ProductState& product) {
  require_qubits(state, product.n());
  Eigen::VectorXcd v = state.amplitudes();
  // The last qubit is the least significant bit: contract it first.
  for (int k = product.n() - 1; k >= 0; --k) {
    const Eigen::Map<const Eigen::MatrixXcd> pairs(v.data(), 2, v.size() / 2);
    Eigen::VectorXcd next = pairs.transpose() * product.factor(k).conjugate();
    v.swap(next);
  }
  return std::norm(v(0));
}

Eigen::Vector2cd partial_contraction(const QuantumState& state, const ProductState& product,
                                     int k) {
  require_qubits(state, product.n());
  const int n = product.n();
  if (k < 0 || k >= n) throw InvalidInput("qubit index out of range");
  const Eigen::VectorXcd left = conj_kron(product, 0, k);
  const Eigen::VectorXcd right = conj_kron(product, k + 1, n);
  const Index low = right.size();
  const Index high = left.size();

  // Column h*2 + b holds the amplitudes with prefix h and bit b on qubit k.
  const Eigen::Map<const Eigen::MatrixXcd> blocks(state.amplitudes().data(), low, 2 * high);
  const Eigen::VectorXcd w = blocks.transpose() * right;
  const Eigen::Map<const Eigen::MatrixXcd> by_bit(w.data(), 2, high);
  return by_bit * left;
}

GroverianResult optimize_product(const QuantumState& state, const GroverianOptions& options) {
  if (options.restarts < 1) throw InvalidInput("restarts must be at least 1");
  if (options.max_sweeps < 1) throw InvalidInput("max_sweeps must be at least 1");

  auto outcomes = parallel_map(static_cast<std::size_t>(options.restarts), [&](std::size_t j) {
    auto start = j == 0 ? basis_start(state)
                        : random_start(state.n(), mix_seed(options.seed, j));
    return run_restart(state, std::move(start), options);
  });

  std::size_t best = 0;
  for (std::size_t j = 1; j < outcomes.size(); ++j) {
    if (outcomes[j].value > outcomes[best].value) best = j;
  }

  GroverianResult result;
  result.argmax = ProductState(outcomes[best].factors);
  result.restarts_used = options.restarts;
  result.converged = outcomes[best].converged;
  for (auto& o : outcomes) {
    result.best_per_restart.push_back(o.value);
    result.sweeps_per_restart.push_back(o.sweeps);
    if (options.record_updates) result.update_trace.push_back(std::move(o.trace));
  }

  // 1 - P_max from the residual |phi - <s|phi> s|^2, which stays accurate when
  // the state is (nearly) a product state.
  const Eigen::VectorXcd s = kernels::kron_factors(result.argmax.factors());
  const Eigen::VectorXcd& a = state.amplitudes();
  const Complex overlap = s.dot(a);
  const double residual = (a - overlap * s).squaredNorm() / a.squaredNorm();
  result.p_max = std::clamp(1.0 - residual, 0.0, 1.0);
  result.g = std::sqrt(1.0 - result.p_max);
  return result;
}

double groverian_measure(const QuantumState& state, const GroverianOptions& options) {
  return optimize_product(state, options).g;
}

double grid_search_oracle(const QuantumState& state, int resolution) {
  const int n = state.n();
  if (n > 3) throw UnsupportedSize("grid-search oracle supports at most 3 qubits");
  if (resolution < 16) throw InvalidInput("grid resolution must be at least 16");
  const auto& a = state.amplitudes();

  std::vector<Eigen::Vector2cd> grid;
  grid.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    const double theta = std::numbers::pi * i / (resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      grid.push_back(bloch_factor(theta, 2.0 * std::numbers::pi * j / resolution));
    }
  }

  if (n == 1) {
    double best = 0.0;
    for (const auto& c : grid) best = std::max(best, std::norm(c.dot(a.head<2>())));
    return best;
  }
  if (n == 2) {
    Eigen::Matrix2cd w;
    w << a(0), a(1), a(2), a(3);
    return top_singular_value_sq(w);
  }

  double best = 0.0;
  for (const auto& c : grid) {
    // Contract qubit 0 (most significant), leaving a 2 x 2 matrix over qubits 1, 2.
    const Eigen::Vector4cd rest = std::conj(c(0)) * a.head<4>() + std::conj(c(1)) * a.tail<4>();
    Eigen::Matrix2cd w;
    w << rest(0), rest(1), rest(2), rest(3);
    best = std::max(best, top_singular_value_sq(w));
  }
  return best;
}

QuantumState apply_local_unitaries(const QuantumState& state,
                                   std::span<const Eigen::Matrix2cd> unitaries) {
  const int n = state.n();
  if (static_cast<int>(unitaries.size()) != n) {
    throw InvalidInput("need exactly one single-qubit unitary per qubit");
  }
  for (const auto& u : unitaries) {
    if (((u.adjoint() * u) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
      throw InvalidInput("local operator is not unitary");
    }
  }
  Eigen::VectorXcd a = state.amplitudes();
  for (int k = 0; k < n; ++k) {
    const Index low = Index{1} << (n - 1 - k);
    const Index high = Index{1} << k;
    const auto& u = unitaries[static_cast<std::size_t>(k)];
    for (Index h = 0; h < high; ++h) {
      for (Index l = 0; l < low; ++l) {
        const Index i0 = (2 * h) * low + l;
        const Index i1 = i0 + low;
        const Complex x0 = a(i0);
        const Complex x1 = a(i1);
        a(i0) = u(0, 0) * x0 + u(0, 1) * x1;
        a(i1) = u(1, 0) * x0 + u(1, 1) * x1;
      }
    }
  }
  return QuantumState::unitary_image(n, std::move(a));
}

double local_unitary_invariance_check(const QuantumState& state,
                                      std::span<const Eigen::Matrix2cd> unitaries,
                                      const GroverianOptions& options) {
  const QuantumState rotated = apply_local_unitaries(state, unitaries);
  return std::abs(groverian_measure(rotated, options) - groverian_measure(state, options));
}

std::vector<Eigen::Matrix2cd> aligning_unitaries(const ProductState& product) {
  const double h = std::numbers::sqrt2 / 2.0;
  const Eigen::Vector2cd plus(h, h);
  const Eigen::Vector2cd minus(h, -h);
  std::vector<Eigen::Matrix2cd> out;
  for (const auto& s : product.factors()) {
    const Eigen::Vector2cd perp(-std::conj(s(1)), std::conj(s(0)));
    out.push_back(plus * s.adjoint() + minus * perp.adjoint());
  }
  return out;
}

MarkedCountDiagnostic marked_count_diagnostic(const QuantumState& state,
                                              const GroverianResult& result,
                                              std::size_t r2_samples, std::uint64_t seed) {
  const auto unitaries = aligning_unitaries(result.argmax);
  const QuantumState rotated = apply_local_unitaries(state, unitaries);

  MarkedCountDiagnostic out;
  out.p_max = result.p_max;
  out.averaged_r1 = average_over_marked_sets(rotated, 1).mean;
  MarkedAverageOptions pairs;
  pairs.selection = MarkedSelection::Sampled;
  pairs.samples = r2_samples;
  pairs.seed = seed;
  out.averaged_r2 = average_over_marked_sets(rotated, 2, pairs).mean;
  return out;
}

}  // namespace grover
