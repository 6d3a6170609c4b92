// Named, parameter-frozen scenario registry: coefficient-curve figures,
// free evolutions, and controlled transfers, plus the runner that turns a
// scenario into series files and summary metrics.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tclq/bloch.hpp"
#include "tclq/control.hpp"
#include "tclq/dynamics.hpp"
#include "tclq/environment.hpp"

namespace tclq {

enum class ScenarioKind { Coefficients, Free, Controlled };

struct Scenario {
  std::string name;    // unique, filesystem-safe
  std::string family;  // group name; equals `name` for singletons
  ScenarioKind kind = ScenarioKind::Free;
  EnvironmentParams env;
  QubitState initial = QubitState::unchecked(Matrix2c::Identity() * 0.5);
  std::optional<QubitState> target;        // present iff control is
  std::optional<ControlParams> control;
  double t_f = 50.0;
  double dt = 0.01;
  std::vector<std::string> outputs;  // requested series, report metadata

  void validate() const;
};

struct Report {
  std::string scenario;
  ScenarioKind kind = ScenarioKind::Free;
  double v_min = kNoTargetV;
  double t_at_v_min = -1.0;
  bool converged = false;
  bool stalled = false;
  BlochVector terminal_bloch;
  double min_eigenvalue = 1.0;
  double max_trace_defect = 0.0;
  bool non_physical = false;
  double path_length = 0.0;
  std::vector<std::string> files;  // series written, if any
  std::vector<std::string> notes;  // warnings, stall diagnostics
};

// Reference states used by the builtin scenarios.
QubitState state_south_pole();     // diag(0, 1)
QubitState state_super_initial();  // [[15/16, s/16], [s/16, 1/16]], s = sqrt(15)
QubitState state_super_target();   // [[3/8, -s/8], [-s/8, 5/8]]
QubitState state_coh_probe();      // [[1/3, q/3], [q/3, 2/3]], q = sqrt(2)

std::vector<Scenario> builtin_scenarios();
std::vector<std::string> builtin_families();

// Members of a family, or the single scenario with that exact name.
// Empty when nothing matches.
std::vector<Scenario> find_scenarios(const std::string& name);

struct RunOptions {
  std::string output_dir;                    // empty: compute only, no files
  std::vector<std::string> formats = {"csv"};
};

Report run_scenario(const Scenario& s, const RunOptions& opts = {});

}  // namespace tclq
