#pragma once

#include "grover/core.hpp"

#include <optional>
#include <vector>

namespace grover {

/// Phase oracle I_f on the register: marked amplitudes change sign. The
/// ancilla is not represented; its only effect is this phase.
QuantumState apply_oracle(const QuantumState& state, const MarkedSet& marked);

/// Inversion about the average, a_i -> 2 a_bar - a_i (i.e. -I + 2|eta><eta|).
QuantumState apply_diffusion(const QuantumState& state);

/// U_G = diffusion after oracle.
QuantumState grover_iterate(const QuantumState& state, const MarkedSet& marked);

/// U_G^k applied to `state`.
QuantumState grover_power(const QuantumState& state, const MarkedSet& marked, long k);

/// P = sum over marked i of |a_i|^2.
double success_probability(const QuantumState& state, const MarkedSet& marked);

struct TrajectoryStep {
  long t = 0;
  double p_marked = 0.0;
  MomentSummary moments;
  std::optional<QuantumState> state;  // only with full snapshots
};

struct Trajectory {
  MarkedSet marked;
  std::vector<TrajectoryStep> steps;
};

/// Records t = 0..t_max. Summaries only unless `record_full_states`.
Trajectory evolve(const QuantumState& state, const MarkedSet& marked, long t_max,
                  bool record_full_states = false);

}  // namespace grover
