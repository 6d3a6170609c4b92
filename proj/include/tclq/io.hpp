// Config parsing and bit-stable CSV/JSON emission. CSV columns are
// t,x,y,z,purity,coherence,beta,V,f1,f2,branch; floats are written as the
// shortest decimal that parses back to the same bits.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tclq/scenarios.hpp"

namespace tclq {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Parsed run configuration: a builtin scenario name and/or field-wise
// overrides. Every override is validated before any run starts.
struct RunConfig {
  std::string scenario;  // builtin family or member name; may be empty

  struct EnvOverride {
    std::optional<double> alpha, omega0, kT, r;
  } env;

  struct ControlOverride {
    std::optional<double> g1, g2, theta, epsilon, dt, t_f, f_max;
  } control;

  std::optional<BlochVector> initial_bloch;
  std::optional<BlochVector> target_bloch;
  std::optional<double> t_f, dt;

  std::string output_dir = ".";
  std::vector<std::string> formats = {"csv"};
  int random_states = 1000;
  int verbosity = 0;
};

// Strict JSON-object parser: unknown keys and invariant violations are
// hard errors carrying the offending key path.
RunConfig parse_config(const std::string& json_text);

// Resolves the config into one concrete scenario (builtin + overrides, or
// fully inline when no name is given). Throws ConfigError when the result
// is inconsistent or incomplete.
Scenario materialize(const RunConfig& cfg);

// Shortest round-trip decimal representation.
std::string format_double(double v);

void emit_trajectory_csv(const Trajectory& traj, std::ostream& out);
void emit_trajectory_json(const Trajectory& traj, const Scenario& s,
                          std::ostream& out);

// Coefficient curves: t,beta,envelope and optionally gamma,delta columns.
void emit_coefficients_csv(const EnvironmentParams& env, double t_max,
                           double dt, bool full, std::ostream& out);

void emit_report_json(const Report& report, std::ostream& out);

}  // namespace tclq
