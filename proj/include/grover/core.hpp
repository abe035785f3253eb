#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace grover {

using Index = Eigen::Index;
using Complex = std::complex<double>;

/// Raised for malformed user input: bad dimensions, unnormalized states,
/// out-of-range marked indices, violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request that is well formed but cannot be honoured at the requested size.
class UnsupportedSize : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An experiment configuration that is internally inconsistent or infeasible.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kNormTolerance = 1e-12;
inline constexpr int kMaxQubits = 24;

/// Number of basis states of an n-qubit register.
Index dimension_of(int n);

/// Pure state of an n-qubit register, stored as 2^n complex amplitudes.
///
/// Instances are immutable. Construction checks the norm to within
/// kNormTolerance; use renormalized() to rescale explicitly.
class QuantumState {
 public:
  QuantumState(int n, Eigen::VectorXcd amplitudes);

  /// Rescales `amplitudes` to unit norm. Fails on a zero vector.
  static QuantumState renormalized(int n, Eigen::VectorXcd amplitudes);

  /// Wraps the output of a norm-preserving map. Rounding accumulated over
  /// many unitary steps is tolerated up to 1e-8; larger drift is a bug.
  static QuantumState unitary_image(int n, Eigen::VectorXcd amplitudes);

  int n() const { return n_; }
  Index dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](Index i) const { return amplitudes_[i]; }
  double norm() const { return amplitudes_.norm(); }

 private:
  QuantumState(int n, Eigen::VectorXcd amplitudes, double tolerance);

  int n_;
  Eigen::VectorXcd amplitudes_;
};

/// The set M of marked basis indices, i.e. the oracle f(i) = [i in M].
class MarkedSet {
 public:
  /// Indices are sorted; duplicates, out-of-range values, r == 0 and r == N
  /// are rejected.
  MarkedSet(int n, std::vector<Index> indices);

  int n() const { return n_; }
  Index dim() const { return Index{1} << n_; }
  Index r() const { return static_cast<Index>(indices_.size()); }
  std::span<const Index> indices() const { return indices_; }
  bool contains(Index i) const { return mask_[static_cast<std::size_t>(i)] != 0; }
  std::span<const std::uint8_t> mask() const { return mask_; }

  friend bool operator==(const MarkedSet& a, const MarkedSet& b) {
    return a.n_ == b.n_ && a.indices_ == b.indices_;
  }

 private:
  int n_;
  std::vector<Index> indices_;
  std::vector<std::uint8_t> mask_;
};

/// First and second moments of the amplitude distribution, overall and split
/// into marked / unmarked parts.
struct MomentSummary {
  Complex a_bar;
  Complex a_bar_m;
  Complex a_bar_u;
  double sigma_a = 0.0;
  double sigma_m = 0.0;
  double sigma_u = 0.0;
};

MomentSummary moments(const QuantumState& state, const MarkedSet& marked);

/// <a|b> = sum_i conj(a_i) b_i.
Complex inner_product(const QuantumState& a, const QuantumState& b);

/// |<a|b>|^2; insensitive to global phase.
double fidelity(const QuantumState& a, const QuantumState& b);

/// Bitstring |i_1...i_n>, most significant qubit first.
std::string basis_label(Index i, int n);

void require_same_register(const QuantumState& state, const MarkedSet& marked);

}  // namespace grover
