#pragma once

#include "grover/core.hpp"

#include <optional>
#include <span>
#include <string_view>

namespace grover {

enum class StateKind {
  FixedPointClassA,  // a_bar_m = 0, all unmarked amplitudes zero: U_G phi = phi
  FixedPointClassB,  // all marked amplitudes zero, a_bar_u = 0: U_G phi = -phi
  TwoCycle,          // a_bar_m = a_bar_u = 0: U_G^2 phi = phi
  ConstantP,         // a_bar_m = +-i sqrt((N-r)/r) a_bar_u: P(t) constant
  PeriodicCycle,     // omega / pi rational with small denominator
  Generic,
};

std::string_view to_string(StateKind kind);

struct ClassEvidence {
  Complex a_bar_m;
  Complex a_bar_u;
  double max_marked_abs = 0.0;    // max |a_i| over marked
  double max_unmarked_abs = 0.0;  // max |a_i| over unmarked
  double constant_p_residual = 0.0;  // min over signs of |a_bar_m -+ i sqrt((N-r)/r) a_bar_u|
  double omega = 0.0;
  std::optional<std::pair<long, long>> omega_over_pi;  // (p, q) in lowest terms
};

struct StateClass {
  StateKind kind = StateKind::Generic;
  std::optional<long> period;  // 1 for fixed points, 2 for two-cycles
  ClassEvidence evidence;
};

inline constexpr double kDefaultClassifyTolerance = 1e-9;
inline constexpr double kDefaultCycleTolerance = 1e-10;
inline constexpr long kRationalMaxDenominator = 64;
inline constexpr double kRationalWindow = 1e-12;

/// Moment-based classification. Precedence when several conditions hold:
/// fixed point, two-cycle, constant P, periodic cycle, generic.
StateClass classify(const QuantumState& state, const MarkedSet& marked,
                    double tol = kDefaultClassifyTolerance);

/// Best rational approximation p/q of x with q <= max_denominator from the
/// continued-fraction convergents, accepted only if |x - p/q| <= window.
std::optional<std::pair<long, long>> rational_approximation(double x, long max_denominator,
                                                            double window);

/// Smallest k <= max_period with U_G^k phi = phi, tested through the overlap:
/// Re <phi|U_G^k phi> >= 1 - tol. A global phase does not count as a return.
std::optional<long> detect_cycle(const QuantumState& state, const MarkedSet& marked,
                                 long max_period, double tol = kDefaultCycleTolerance);

/// Smallest k <= max_period with |<phi|U_G^k phi>|^2 >= 1 - tol, i.e. a
/// return up to global phase.
std::optional<long> detect_cycle_up_to_phase(const QuantumState& state, const MarkedSet& marked,
                                             long max_period, double tol = kDefaultCycleTolerance);

/// State supported on the marked set with the given zero-mean, unit-norm
/// weights; a class (a) fixed point.
QuantumState build_fixed_point(const MarkedSet& marked, std::span<const Complex> weights);

}  // namespace grover
