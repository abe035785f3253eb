#include "grover/simulator.hpp"

#include "grover/kernels.hpp"

namespace grover {

QuantumState apply_oracle(const QuantumState& state, const MarkedSet& marked) {
  require_same_register(state, marked);
  Eigen::VectorXcd a = state.amplitudes();
  kernels::apply_oracle(a, marked.indices());
  return QuantumState::unitary_image(state.n(), std::move(a));
}

QuantumState apply_diffusion(const QuantumState& state) {
  Eigen::VectorXcd a = state.amplitudes();
  kernels::apply_diffusion(a);
  return QuantumState::unitary_image(state.n(), std::move(a));
}

QuantumState grover_iterate(const QuantumState& state, const MarkedSet& marked) {
  return grover_power(state, marked, 1);
}

QuantumState grover_power(const QuantumState& state, const MarkedSet& marked, long k) {
  require_same_register(state, marked);
  if (k < 0) throw InvalidInput("iteration count must be non-negative");
  Eigen::VectorXcd a = state.amplitudes();
  for (long t = 0; t < k; ++t) kernels::grover_step(a, marked.indices());
  return QuantumState::unitary_image(state.n(), std::move(a));
}

double success_probability(const QuantumState& state, const MarkedSet& marked) {
  require_same_register(state, marked);
  return kernels::marked_probability(state.amplitudes(), marked.indices());
}

Trajectory evolve(const QuantumState& state, const MarkedSet& marked, long t_max,
                  bool record_full_states) {
  require_same_register(state, marked);
  if (t_max < 0) throw InvalidInput("t_max must be non-negative");

  Trajectory out{marked, {}};
  out.steps.reserve(static_cast<std::size_t>(t_max) + 1);

  QuantumState current = state;
  for (long t = 0;; ++t) {
    TrajectoryStep step;
    step.t = t;
    step.p_marked = success_probability(current, marked);
    step.moments = moments(current, marked);
    if (record_full_states) step.state = current;
    out.steps.push_back(std::move(step));
    if (t == t_max) break;
    current = grover_iterate(current, marked);
  }
  return out;
}

}  // namespace grover
