#pragma once

#include "grover/core.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace grover {

struct Trajectory;
struct ComparisonReport;
struct SweepSummary;
struct StateClass;
struct GroverianResult;

/// Largest norm deviation a state file may carry. Files off by more than
/// kNormTolerance are renormalized on load; the rest load verbatim.
inline constexpr double kFileNormTolerance = 1e-9;

/// {"n": <int>, "amplitudes": [[re, im], ...]}
nlohmann::json state_to_json(const QuantumState& state);
QuantumState state_from_json(const nlohmann::json& j);
QuantumState load_state_file(const std::string& path);
void save_state_file(const QuantumState& state, const std::string& path);

/// Header t,p_marked,abar_m_re,abar_m_im,abar_u_re,abar_u_im,sigma_m,sigma_u;
/// 17 significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

nlohmann::json to_json(const ComparisonReport& report);
nlohmann::json to_json(const SweepSummary& summary);
nlohmann::json to_json(const StateClass& cls, double tol);
nlohmann::json to_json(const GroverianResult& result, int n);

/// Writes `j.dump(2)` plus a trailing newline.
void write_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace grover
