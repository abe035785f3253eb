#include "grover/analytic.hpp"

#include <cmath>
#include <numbers>

namespace grover {

namespace {

constexpr Complex kI{0.0, 1.0};

// Below this fraction of the mean-carried probability, delta_p is treated as
// exactly zero.
constexpr double kDegenerateRatio = 1e-13;
// Probability carried by the means below which both means count as zero.
constexpr double kVanishingMass = 1e-24;

}  // namespace

long optimal_iterations(int n, Index r) {
  const Index dim = dimension_of(n);
  if (r < 1 || r >= dim) {
    throw InvalidInput("r must satisfy 1 <= r < N, got r = " + std::to_string(r));
  }
  const double ratio = static_cast<double>(dim) / static_cast<double>(r);
  return static_cast<long>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

AnalyticParams compute_params(const QuantumState& state, const MarkedSet& marked) {
  const MomentSummary mom = moments(state, marked);

  AnalyticParams p;
  p.n = state.n();
  p.r = marked.r();
  p.dim = state.dim();
  p.a_bar_m0 = mom.a_bar_m;
  p.a_bar_u0 = mom.a_bar_u;
  p.sigma_m = mom.sigma_m;
  p.sigma_u = mom.sigma_u;

  const double big_n = static_cast<double>(p.dim);
  const double r = static_cast<double>(p.r);
  const double u_count = big_n - r;
  const Complex u0 = mom.a_bar_u;
  const Complex m0 = mom.a_bar_m;

  // sin(omega/2) = sqrt(r/N) is the same angle as acos(1 - 2r/N) but stays
  // accurate for r << N.
  p.omega = 2.0 * std::asin(std::sqrt(r / big_n));
  p.omega_approx = 2.0 * std::sqrt(r / big_n);

  const double mean_mass = u_count * std::norm(u0) + r * std::norm(m0);
  p.delta_p = std::abs(u_count * u0 * u0 + r * m0 * m0);
  p.k_const = mean_mass - p.delta_p;
  p.p0 = 1.0 - u_count * p.sigma_u * p.sigma_u - 0.5 * p.k_const;
  p.means_vanish = mean_mass <= kVanishingMass;

  p.tau = optimal_iterations(p.n, p.r);

  const Complex s0 = std::sqrt(r / u_count) * m0;
  const Complex plus = u0 + kI * s0;
  const Complex minus = u0 - kI * s0;
  p.delta_defined = !p.means_vanish && p.delta_p > kDegenerateRatio * mean_mass;
  if (!p.delta_defined) {
    p.delta_p = 0.0;
    p.k_const = mean_mass;
    p.p0 = 1.0 - u_count * p.sigma_u * p.sigma_u - 0.5 * p.k_const;
    return p;
  }

  // exp(2 i delta) = plus / minus, principal branch, then shifted into
  // -pi/2 <= Re(delta) < pi/2.
  p.delta = -0.5 * kI * std::log(plus / minus);
  if (p.delta.real() >= std::numbers::pi / 2.0) p.delta -= std::numbers::pi;
  // alpha e^{i delta} = plus fixes the sign left open by alpha^2 = u0^2 + s0^2.
  p.alpha = plus * std::exp(-kI * p.delta);

  const double half_root = 0.5 * std::sqrt(big_n / r);
  p.tau_m = static_cast<long>(std::floor(half_root * (std::numbers::pi / 2.0 - p.delta.real())));

  p.tau_m_best = std::max(0L, p.tau_m - 1);
  double best = analytic_success(p, p.tau_m_best);
  for (long t = p.tau_m_best + 1; t <= p.tau_m + 1; ++t) {
    const double value = analytic_success(p, t);
    if (value > best) {
      best = value;
      p.tau_m_best = t;
    }
  }
  return p;
}

std::pair<Complex, Complex> analytic_amplitude_means(const AnalyticParams& params, long t) {
  const double r = static_cast<double>(params.r);
  const double u_count = static_cast<double>(params.dim) - r;
  const double marked_scale = std::sqrt(u_count / r);
  const double phase = params.omega * static_cast<double>(t);

  if (params.delta_defined) {
    const Complex angle = phase + params.delta;
    return {marked_scale * params.alpha * std::sin(angle), params.alpha * std::cos(angle)};
  }
  if (params.means_vanish) return {Complex{}, Complex{}};

  const Complex s0 = params.a_bar_m0 / marked_scale;
  const Complex u0 = params.a_bar_u0;
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  return {marked_scale * (u0 * s + s0 * c), u0 * c - s0 * s};
}

QuantumState analytic_amplitudes(const QuantumState& state, const MarkedSet& marked, long t) {
  if (t < 0) throw InvalidInput("t must be non-negative");
  const AnalyticParams params = compute_params(state, marked);
  const auto [mean_m, mean_u] = analytic_amplitude_means(params, t);
  const double sign = (t % 2 == 0) ? 1.0 : -1.0;

  const auto& a0 = state.amplitudes();
  Eigen::VectorXcd a(a0.size());
  for (Index i = 0; i < a0.size(); ++i) {
    if (marked.contains(i)) {
      a[i] = mean_m + (a0[i] - params.a_bar_m0);
    } else {
      a[i] = mean_u + sign * (a0[i] - params.a_bar_u0);
    }
  }
  return QuantumState::unitary_image(state.n(), std::move(a));
}

double analytic_success(const AnalyticParams& params, long t) {
  if (!params.delta_defined) return params.p0;
  const double c = std::cos(params.omega * static_cast<double>(t) + params.delta.real());
  return params.p0 - params.delta_p * c * c;
}

double averaged_success(const QuantumState& state) {
  return std::norm(state.amplitudes().sum()) / static_cast<double>(state.dim());
}

double eta_overlap(const QuantumState& state) {
  const Complex overlap = state.amplitudes().sum() / std::sqrt(static_cast<double>(state.dim()));
  return std::norm(overlap);
}

}  // namespace grover
