#include "grover/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace grover {

Index dimension_of(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw InvalidInput("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                       "], got " + std::to_string(n));
  }
  return Index{1} << n;
}

QuantumState::QuantumState(int n, Eigen::VectorXcd amplitudes)
    : QuantumState(n, std::move(amplitudes), kNormTolerance) {}

QuantumState::QuantumState(int n, Eigen::VectorXcd amplitudes, double tolerance)
    : n_(n), amplitudes_(std::move(amplitudes)) {
  const Index expected = dimension_of(n);
  if (amplitudes_.size() != expected) {
    throw InvalidInput("state of " + std::to_string(n) + " qubits needs " +
                       std::to_string(expected) + " amplitudes, got " +
                       std::to_string(amplitudes_.size()));
  }
  if (!amplitudes_.allFinite()) throw InvalidInput("state has non-finite amplitudes");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tolerance) {
    throw InvalidInput("state is not normalized: sum |a_i|^2 = " + std::to_string(norm2));
  }
}

QuantumState QuantumState::renormalized(int n, Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidInput("cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return QuantumState(n, std::move(amplitudes));
}

QuantumState QuantumState::unitary_image(int n, Eigen::VectorXcd amplitudes) {
  return QuantumState(n, std::move(amplitudes), 1e-8);
}

MarkedSet::MarkedSet(int n, std::vector<Index> indices) : n_(n), indices_(std::move(indices)) {
  const Index dim = dimension_of(n);
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw InvalidInput("marked indices must be distinct");
  }
  if (indices_.empty() || static_cast<Index>(indices_.size()) >= dim) {
    throw InvalidInput("need 1 <= r <= N-1 marked states, got r = " +
                       std::to_string(indices_.size()) + " for N = " + std::to_string(dim));
  }
  if (indices_.front() < 0 || indices_.back() >= dim) {
    throw InvalidInput("marked index out of range [0, " + std::to_string(dim) + ")");
  }
  mask_.assign(static_cast<std::size_t>(dim), 0);
  for (const Index i : indices_) mask_[static_cast<std::size_t>(i)] = 1;
}

void require_same_register(const QuantumState& state, const MarkedSet& marked) {
  if (state.n() != marked.n()) {
    throw InvalidInput("marked set is for " + std::to_string(marked.n()) +
                       " qubits but the state has " + std::to_string(state.n()));
  }
}

MomentSummary moments(const QuantumState& state, const MarkedSet& marked) {
  require_same_register(state, marked);
  const auto& a = state.amplitudes();
  const Index dim = a.size();
  const auto r = static_cast<double>(marked.r());
  const auto u = static_cast<double>(dim - marked.r());

  Complex sum_m{};
  Complex sum_u{};
  for (Index i = 0; i < dim; ++i) {
    if (marked.contains(i)) {
      sum_m += a[i];
    } else {
      sum_u += a[i];
    }
  }

  MomentSummary out;
  out.a_bar = (sum_m + sum_u) / static_cast<double>(dim);
  out.a_bar_m = sum_m / r;
  out.a_bar_u = sum_u / u;

  double var_a = 0.0;
  double var_m = 0.0;
  double var_u = 0.0;
  for (Index i = 0; i < dim; ++i) {
    var_a += std::norm(a[i] - out.a_bar);
    if (marked.contains(i)) {
      var_m += std::norm(a[i] - out.a_bar_m);
    } else {
      var_u += std::norm(a[i] - out.a_bar_u);
    }
  }
  out.sigma_a = std::sqrt(var_a / static_cast<double>(dim));
  out.sigma_m = std::sqrt(var_m / r);
  out.sigma_u = std::sqrt(var_u / u);
  return out;
}

Complex inner_product(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim()) throw InvalidInput("inner product of states of different size");
  return a.amplitudes().dot(b.amplitudes());  // Eigen's dot conjugates the left operand
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  return std::norm(inner_product(a, b));
}

std::string basis_label(Index i, int n) {
  std::string bits(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k) {
    if ((i >> (n - 1 - k)) & 1) bits[static_cast<std::size_t>(k)] = '1';
  }
  return "|" + bits + ">";
}

}  // namespace grover
