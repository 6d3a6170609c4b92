// Lyapunov feedback for pure-state transfer: the distance-based Lyapunov
// function, the T-functions and drift term of its derivative, the
// three-branch switching law, and the closed-loop integration.
#pragma once

#include <optional>

#include "tclq/bloch.hpp"
#include "tclq/dynamics.hpp"
#include "tclq/environment.hpp"

namespace tclq {

struct ControlParams {
  double g1 = 1.0;          // branch-B proportional gain
  double g2 = 1.0;          // branch-A proportional gain
  double theta = 0.01;      // threshold deciding which field cancels drift
  double epsilon = 5e-4;    // target error: converged when V <= epsilon
  double dt = 5e-4;         // control update = integration step
  double t_f = 6.0;         // horizon
  std::optional<double> f_max;  // field amplitude cap, disabled by default
  int n_stall = 2000;  // consecutive branch-C steps with V > epsilon before
                       // the run is reported as stalled

  void validate() const;  // throws std::invalid_argument
};

struct ControlDecision {
  double f1 = 0.0;
  double f2 = 0.0;
  Branch branch = Branch::C;
  double T1 = 0.0;
  double T2 = 0.0;
  double C = 0.0;  // drift term of dV/dt
  double V = 0.0;
  bool saturated = false;
};

struct StallReport {
  long branch_c_steps = 0;
  long longest_c_streak = 0;
  bool stalled = false;
  double t_stalled = -1.0;
};

struct TransferResult {
  Trajectory trajectory;
  double v_min = 0.0;
  double t_at_v_min = 0.0;
  bool converged = false;
  StallReport stall;
};

// V = 1/2 tr((rho_s - rho_f)^2) = 1/4 |r - r_f|^2, the squared trace
// distance.
double lyapunov_v(const QubitState& rho_s, const QubitState& rho_f);

// T1 = y_f z - z_f y, T2 = z_f x - x_f z; equal to tr(i[H_m, rho_s] rho_f).
std::pair<double, double> t_functions(const QubitState& rho_s,
                                      const QubitState& rho_f);

// tr((L_t(rho_s) - i[H0, rho_s])(rho_s - rho_f)). Throws if the imaginary
// residue exceeds 1e-10.
double drift_c(const QubitState& rho_s, const QubitState& rho_f,
               const EnvironmentParams& env, double t);

// One evaluation of the switching law:
//   A (|T1| > theta):             f1 = -C/T1, f2 = -g2 T2
//   B (|T1| <= theta < |T2|):     f1 = -g1 T1, f2 = -C/T2
//   C (both below threshold):     f1 = f2 = 0, V decides convergence/stall
ControlDecision control_step(const QubitState& rho_s, const QubitState& rho_f,
                             const ControlParams& params,
                             const EnvironmentParams& env, double t);

// Closed loop: decide, hold the fields over dt, advance with RK4, repeat.
// Terminates at the first sample with V <= epsilon, at t_f, or when branch
// C persists with V > epsilon for n_stall consecutive steps.
TransferResult integrate_controlled(const EnvironmentParams& env,
                                    const QubitState& rho0,
                                    const QubitState& rho_f,
                                    const ControlParams& params);

}  // namespace tclq
