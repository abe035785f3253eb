#include "grover/dynamics.hpp"

#include "grover/kernels.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace grover {

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::FixedPointClassA: return "FixedPointClassA";
    case StateKind::FixedPointClassB: return "FixedPointClassB";
    case StateKind::TwoCycle: return "TwoCycle";
    case StateKind::ConstantP: return "ConstantP";
    case StateKind::PeriodicCycle: return "PeriodicCycle";
    case StateKind::Generic: return "Generic";
  }
  return "Generic";
}

std::optional<std::pair<long, long>> rational_approximation(double x, long max_denominator,
                                                            double window) {
  // Convergents h/k of the continued fraction of x.
  long h_prev = 1, h = static_cast<long>(std::floor(x));
  long k_prev = 0, k = 1;
  double rest = x - std::floor(x);
  std::optional<std::pair<long, long>> best;
  while (true) {
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= window) {
      best = std::pair{h, k};
      break;
    }
    if (rest < 1e-15) break;
    const double inv = 1.0 / rest;
    const auto term = static_cast<long>(std::floor(inv));
    rest = inv - static_cast<double>(term);
    const long h_next = term * h + h_prev;
    const long k_next = term * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return best;
}

StateClass classify(const QuantumState& state, const MarkedSet& marked, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("classification tolerance must be positive");
  const MomentSummary mom = moments(state, marked);
  const auto& a = state.amplitudes();
  const double big_n = static_cast<double>(state.dim());
  const double r = static_cast<double>(marked.r());

  StateClass out;
  ClassEvidence& ev = out.evidence;
  ev.a_bar_m = mom.a_bar_m;
  ev.a_bar_u = mom.a_bar_u;
  double max_unmarked_deviation = 0.0;
  for (Index i = 0; i < a.size(); ++i) {
    const double mag = std::abs(a[i]);
    if (marked.contains(i)) {
      ev.max_marked_abs = std::max(ev.max_marked_abs, mag);
    } else {
      ev.max_unmarked_abs = std::max(ev.max_unmarked_abs, mag);
      max_unmarked_deviation = std::max(max_unmarked_deviation, std::abs(a[i] - mom.a_bar_u));
    }
  }
  const Complex rotated_u = Complex{0.0, 1.0} * std::sqrt((big_n - r) / r) * mom.a_bar_u;
  ev.constant_p_residual =
      std::min(std::abs(mom.a_bar_m - rotated_u), std::abs(mom.a_bar_m + rotated_u));
  ev.omega = 2.0 * std::asin(std::sqrt(r / big_n));
  ev.omega_over_pi = rational_approximation(ev.omega / std::numbers::pi, kRationalMaxDenominator,
                                            kRationalWindow);

  const bool mean_m_zero = std::abs(mom.a_bar_m) < tol;
  const bool mean_u_zero = std::abs(mom.a_bar_u) < tol;

  if (mean_m_zero && ev.max_unmarked_abs < tol) {
    out.kind = StateKind::FixedPointClassA;
    out.period = 1;
  } else if (ev.max_marked_abs < tol && mean_u_zero) {
    out.kind = StateKind::FixedPointClassB;
    out.period = 1;
  } else if (mean_m_zero && mean_u_zero) {
    out.kind = StateKind::TwoCycle;
    out.period = 2;
  } else if (ev.constant_p_residual < tol) {
    out.kind = StateKind::ConstantP;
  } else if (ev.omega_over_pi) {
    // The means return after omega t hits a multiple of 2 pi; unmarked
    // deviations additionally need t even.
    const auto [p, q] = *ev.omega_over_pi;
    const long rotation_period = 2 * q / std::gcd(p, 2 * q);
    const long sign_period = max_unmarked_deviation >= tol ? 2 : 1;
    out.kind = StateKind::PeriodicCycle;
    out.period = std::lcm(rotation_period, sign_period);
  } else {
    out.kind = StateKind::Generic;
  }
  return out;
}

namespace {

template <typename Accept>
std::optional<long> first_return(const QuantumState& state, const MarkedSet& marked,
                                 long max_period, Accept accept) {
  require_same_register(state, marked);
  if (max_period < 1) throw InvalidInput("max_period must be at least 1");
  const auto& start = state.amplitudes();
  Eigen::VectorXcd a = start;
  for (long k = 1; k <= max_period; ++k) {
    kernels::grover_step(a, marked.indices());
    if (accept(start.dot(a))) return k;
  }
  return std::nullopt;
}

}  // namespace

std::optional<long> detect_cycle(const QuantumState& state, const MarkedSet& marked,
                                 long max_period, double tol) {
  return first_return(state, marked, max_period,
                      [tol](Complex overlap) { return overlap.real() >= 1.0 - tol; });
}

std::optional<long> detect_cycle_up_to_phase(const QuantumState& state, const MarkedSet& marked,
                                             long max_period, double tol) {
  return first_return(state, marked, max_period,
                      [tol](Complex overlap) { return std::norm(overlap) >= 1.0 - tol; });
}

QuantumState build_fixed_point(const MarkedSet& marked, std::span<const Complex> weights) {
  if (static_cast<Index>(weights.size()) != marked.r()) {
    throw InvalidInput("need one weight per marked state");
  }
  if (weights.size() < 2) throw InvalidInput("a marked-only fixed point needs r >= 2");
  Complex sum{};
  double norm2 = 0.0;
  for (const Complex w : weights) {
    sum += w;
    norm2 += std::norm(w);
  }
  if (std::abs(sum) / static_cast<double>(weights.size()) > 1e-12) {
    throw InvalidInput("fixed-point weights must have zero mean");
  }
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw InvalidInput("fixed-point weights must have unit norm");
  }
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(marked.dim());
  const auto indices = marked.indices();
  for (std::size_t j = 0; j < weights.size(); ++j) a[indices[j]] = weights[j];
  return QuantumState(marked.n(), std::move(a));
}

}  // namespace grover
