#pragma once

#include "grover/core.hpp"

#include <utility>

namespace grover {

/// Coefficients of the closed-form Grover dynamics for one (state, M) pair.
///
/// The marked / unmarked means rotate in the plane spanned by
/// (a_bar_u, sqrt(r/(N-r)) a_bar_m) with angular step omega per iteration:
///
///   a_bar_u(t) = alpha cos(omega t + delta)
///   a_bar_m(t) = sqrt((N-r)/r) alpha sin(omega t + delta)
///
/// alpha and delta are complex for complex initial means, and the identity
/// holds as a complex identity. The success probability is
///
///   P(t) = p0 - delta_p cos^2(omega t + Re delta).
struct AnalyticParams {
  int n = 0;
  Index r = 0;
  Index dim = 0;

  Complex a_bar_m0;
  Complex a_bar_u0;
  double sigma_m = 0.0;
  double sigma_u = 0.0;

  Complex alpha;
  Complex delta;        // Re(delta) in [-pi/2, pi/2)
  bool delta_defined = false;  // false iff alpha == 0 (delta_p == 0)
  bool means_vanish = false;   // both initial means are zero: a two-cycle or fixed point

  double omega = 0.0;         // exact: cos(omega) = 1 - 2r/N
  double omega_approx = 0.0;  // 2 sqrt(r/N), small-r/N diagnostic only
  double p0 = 0.0;
  double delta_p = 0.0;
  double k_const = 0.0;

  long tau = 0;        // floor(pi/4 sqrt(N/r))
  long tau_m = 0;      // floor(1/2 sqrt(N/r) (pi/2 - Re delta))
  long tau_m_best = 0; // integer argmax of P(t) over {tau_m - 1, tau_m, tau_m + 1}
};

AnalyticParams compute_params(const QuantumState& state, const MarkedSet& marked);

/// (a_bar_m(t), a_bar_u(t)). When alpha == 0 the means follow the same
/// rotation written in terms of the initial means, which vanishes
/// identically for two-cycle states.
std::pair<Complex, Complex> analytic_amplitude_means(const AnalyticParams& params, long t);

/// a_i(t): marked a_bar_m(t) + da_i, unmarked a_bar_u(t) + (-1)^t da_i, with
/// da_i the deviation of a_i(0) from its group mean.
QuantumState analytic_amplitudes(const QuantumState& state, const MarkedSet& marked, long t);

/// P(t). Constant (= p0) when delta_p vanishes.
double analytic_success(const AnalyticParams& params, long t);

/// floor((pi/4) sqrt(N/r)).
long optimal_iterations(int n, Index r);

/// N |a_bar|^2, the success probability averaged over marked-state choices.
double averaged_success(const QuantumState& state);

/// |<eta|phi>|^2; equals averaged_success analytically.
double eta_overlap(const QuantumState& state);

}  // namespace grover
