#pragma once

// In-place amplitude kernels shared by the simulator, the analytic module and
// the tests. They operate on any dense Eigen column expression and never form
// an N x N operator.

#include <Eigen/Dense>

#include <span>

namespace grover::kernels {

/// I_f: a_i -> -a_i for every marked index.
template <typename Derived, typename IndexT>
void apply_oracle(Eigen::MatrixBase<Derived>& amplitudes, std::span<const IndexT> marked) {
  for (const auto i : marked) amplitudes(i) = -amplitudes(i);
}

/// Inversion about the average: a_i -> 2 a_bar - a_i.
template <typename Derived>
void apply_diffusion(Eigen::MatrixBase<Derived>& amplitudes) {
  const auto twice_mean = typename Derived::Scalar(2) * amplitudes.mean();
  amplitudes = (-amplitudes).array() + twice_mean;
}

/// One Grover iteration U_G = D I_f.
template <typename Derived, typename IndexT>
void grover_step(Eigen::MatrixBase<Derived>& amplitudes, std::span<const IndexT> marked) {
  apply_oracle(amplitudes, marked);
  apply_diffusion(amplitudes);
}

/// sum over marked indices of |a_i|^2.
template <typename Derived, typename IndexT>
typename Eigen::NumTraits<typename Derived::Scalar>::Real marked_probability(
    const Eigen::MatrixBase<Derived>& amplitudes, std::span<const IndexT> marked) {
  typename Eigen::NumTraits<typename Derived::Scalar>::Real p(0);
  for (const auto i : marked) p += std::norm(amplitudes(i));
  return p;
}

/// Kronecker product of single-qubit factors, first factor most significant.
template <typename Range>
Eigen::VectorXcd kron_factors(const Range& factors) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Ones(1);
  for (const auto& f : factors) {
    Eigen::VectorXcd next(out.size() * 2);
    for (Eigen::Index h = 0; h < out.size(); ++h) {
      next(2 * h) = out(h) * f(0);
      next(2 * h + 1) = out(h) * f(1);
    }
    out.swap(next);
  }
  return out;
}

}  // namespace grover::kernels
