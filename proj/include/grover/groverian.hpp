#pragma once

#include "grover/core.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace grover {

/// n single-qubit factors (c0, c1); qubit 0 is the most significant bit of
/// the basis index.
class ProductState {
 public:
  explicit ProductState(std::vector<Eigen::Vector2cd> factors);

  int n() const { return static_cast<int>(factors_.size()); }
  const std::vector<Eigen::Vector2cd>& factors() const { return factors_; }
  const Eigen::Vector2cd& factor(int k) const { return factors_[static_cast<std::size_t>(k)]; }

  /// a_i = prod_k c_{bit_k(i), k}.
  QuantumState expand() const;

 private:
  std::vector<Eigen::Vector2cd> factors_;
};

/// |<s_1 ... s_n|phi>|^2 by contracting one qubit at a time (O(N) total).
double product_overlap(const QuantumState& state, const ProductState& product);

/// v_k[b] = <s_1..s_{k-1}, b, s_{k+1}..s_n | phi>. Choosing s_k = v_k / |v_k|
/// maximizes the overlap over qubit k with the others held fixed, and the
/// maximum is |v_k|^2.
Eigen::Vector2cd partial_contraction(const QuantumState& state, const ProductState& product, int k);

struct GroverianOptions {
  int restarts = 32;
  int max_sweeps = 1000;
  double tol = 1e-12;
  std::uint64_t seed = 0;
  bool record_updates = false;  // keep every per-update overlap in the result
};

struct GroverianResult {
  double p_max = 0.0;
  double g = 1.0;
  ProductState argmax{std::vector<Eigen::Vector2cd>{}};
  int restarts_used = 0;
  bool converged = false;  // for the restart that produced argmax
  std::vector<double> best_per_restart;
  std::vector<int> sweeps_per_restart;
  std::vector<std::vector<double>> update_trace;  // only with record_updates
};

/// Maximizes |<s|phi>|^2 over product states by alternating exact
/// single-qubit updates. Restart 0 starts from the basis state with the
/// largest |a_i|; the others from seeded Haar-random qubit factors.
/// Restarts are independent and the best one wins (ties to the lower index).
GroverianResult optimize_product(const QuantumState& state, const GroverianOptions& options = {});

/// G(phi) = sqrt(1 - P_max).
double groverian_measure(const QuantumState& state, const GroverianOptions& options = {});

/// Lower bound on P_max for n <= 3 without the alternating optimizer: the
/// first n-2 qubits run over a resolution x resolution grid in (theta, phi)
/// with c0 = cos(theta/2), c1 = e^{i phi} sin(theta/2); the last two qubits
/// are maximized exactly through the largest singular value of the remaining
/// 2 x 2 coefficient matrix. For n = 1 the single qubit is gridded.
double grid_search_oracle(const QuantumState& state, int resolution);

/// Applies U_1 (x) ... (x) U_n; U_k acts on qubit k.
QuantumState apply_local_unitaries(const QuantumState& state,
                                   std::span<const Eigen::Matrix2cd> unitaries);

/// |G(U_1 (x) ... (x) U_n phi) - G(phi)| with both sides optimized.
double local_unitary_invariance_check(const QuantumState& state,
                                      std::span<const Eigen::Matrix2cd> unitaries,
                                      const GroverianOptions& options = {});

/// Local unitaries that rotate each optimal factor s_k onto |+>, so that the
/// overlap of the rotated state with |eta> equals the product overlap.
std::vector<Eigen::Matrix2cd> aligning_unitaries(const ProductState& product);

/// Success probability of the rotated register averaged over marked sets,
/// for r = 1 and r = 2. Both should match p_max up to O(1/sqrt(N)).
struct MarkedCountDiagnostic {
  double p_max = 0.0;
  double averaged_r1 = 0.0;
  double averaged_r2 = 0.0;
};

MarkedCountDiagnostic marked_count_diagnostic(const QuantumState& state,
                                              const GroverianResult& result,
                                              std::size_t r2_samples, std::uint64_t seed);

}  // namespace grover
