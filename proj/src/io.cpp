#include "grover/io.hpp"

#include "grover/dynamics.hpp"
#include "grover/groverian.hpp"
#include "grover/harness.hpp"
#include "grover/simulator.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace grover {

using nlohmann::json;

namespace {

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

std::string g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

json state_to_json(const QuantumState& state) {
  json amps = json::array();
  for (Index i = 0; i < state.dim(); ++i) amps.push_back(complex_pair(state[i]));
  return {{"n", state.n()}, {"amplitudes", std::move(amps)}};
}

QuantumState state_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const Index dim = dimension_of(n);
    const auto& amps = j.at("amplitudes");
    if (!amps.is_array() || static_cast<Index>(amps.size()) != dim) {
      throw InvalidInput("state file needs exactly 2^n = " + std::to_string(dim) + " amplitudes");
    }
    Eigen::VectorXcd a(dim);
    for (Index i = 0; i < dim; ++i) {
      const auto& pair = amps[static_cast<std::size_t>(i)];
      if (!pair.is_array() || pair.size() != 2) {
        throw InvalidInput("amplitude " + std::to_string(i) + " is not a [re, im] pair");
      }
      a(i) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    const double norm2 = a.squaredNorm();
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kFileNormTolerance) {
      throw InvalidInput("state file norm deviates from 1: sum |a_i|^2 = " + std::to_string(norm2));
    }
    if (std::abs(norm2 - 1.0) <= kNormTolerance) return QuantumState(n, std::move(a));
    return QuantumState::renormalized(n, std::move(a));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed state JSON: ") + e.what());
  }
}

QuantumState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open state file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput("cannot parse state file '" + path + "': " + e.what());
  }
  return state_from_json(j);
}

void save_state_file(const QuantumState& state, const std::string& path) {
  write_json_file(state_to_json(state), path);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  out << "t,p_marked,abar_m_re,abar_m_im,abar_u_re,abar_u_im,sigma_m,sigma_u\n";
  for (const auto& step : trajectory.steps) {
    const auto& m = step.moments;
    out << step.t << ',' << g17(step.p_marked) << ',' << g17(m.a_bar_m.real()) << ','
        << g17(m.a_bar_m.imag()) << ',' << g17(m.a_bar_u.real()) << ','
        << g17(m.a_bar_u.imag()) << ',' << g17(m.sigma_m) << ',' << g17(m.sigma_u) << '\n';
  }
}

json to_json(const ComparisonReport& report) {
  const auto& p = report.params;
  json rows = json::array();
  for (const auto& row : report.per_t) {
    rows.push_back({{"t", row.t},
                    {"p_sim", row.p_sim},
                    {"p_analytic", row.p_analytic},
                    {"abs_err", row.abs_err}});
  }
  return {{"n", report.n},
          {"r", p.r},
          {"marked", report.marked},
          {"tau", p.tau},
          {"tau_m", p.tau_m},
          {"tau_m_best", p.tau_m_best},
          {"p0", p.p0},
          {"delta_p", p.delta_p},
          {"k_const", p.k_const},
          {"omega", p.omega},
          {"constant_p", !p.delta_defined},
          {"max_abs_err", report.max_abs_err},
          {"per_t", std::move(rows)}};
}

json to_json(const SweepSummary& summary) {
  const auto& avg = summary.average;
  json j = {{"n", avg.n},
            {"r", avg.r},
            {"state", summary.config.state_source},
            {"tau", summary.tau},
            {"exhaustive", avg.exhaustive},
            {"count", avg.count},
            {"mean_p_tau", avg.mean},
            {"std_error", avg.std_error},
            {"predicted", avg.predicted},
            {"eta_overlap", summary.eta_overlap}};
  if (summary.config.seed) j["seed"] = *summary.config.seed;
  return j;
}

json to_json(const StateClass& cls, double tol) {
  json j = {{"kind", std::string(to_string(cls.kind))},
            {"period", cls.period ? json(*cls.period) : json(nullptr)},
            {"abar_m", complex_pair(cls.evidence.a_bar_m)},
            {"abar_u", complex_pair(cls.evidence.a_bar_u)},
            {"tol", tol}};
  return j;
}

json to_json(const GroverianResult& result, int n) {
  json factors = json::array();
  for (const auto& c : result.argmax.factors()) {
    factors.push_back({c(0).real(), c(0).imag(), c(1).real(), c(1).imag()});
  }
  return {{"n", n},
          {"p_max", result.p_max},
          {"g", result.g},
          {"restarts", result.restarts_used},
          {"converged", result.converged},
          {"best_per_restart", result.best_per_restart},
          {"argmax", std::move(factors)}};
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write output file '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace grover
