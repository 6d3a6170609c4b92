// Master-equation right-hand side, fixed-step RK4 propagation, free
// evolution, the analytic equilibrium state, and the purity-rate
// diagnostic.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tclq/bloch.hpp"
#include "tclq/environment.hpp"

namespace tclq {

// H = omega0/2 sigma_z + f1 sigma_x + f2 sigma_y
struct HamiltonianModel {
  double omega0 = 10.0;

  Matrix2c h0() const;
  Matrix2c total(double f1, double f2) const;
};

enum class Branch { A, B, C, Free };
const char* branch_name(Branch b);

// V is -1 when the run has no target state.
constexpr double kNoTargetV = -1.0;

struct TrajectoryPoint {
  double t = 0.0;
  QubitState state = QubitState::unchecked(Matrix2c::Identity() * 0.5);
  BlochVector bloch;
  double purity = 0.0;
  double coherence = 0.0;
  double beta = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double V = kNoTargetV;
  Branch branch = Branch::Free;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  EnvironmentParams env;
  double dt = 0.0;

  // Monitoring along the run; positivity is never projected away.
  double max_trace_defect = 0.0;  // per-step |tr - 1| before renormalization
  double min_eigenvalue = 1.0;
  bool non_physical = false;  // min eigenvalue dipped below tolerance
  double first_non_physical_t = -1.0;

  // Sum over samples of the Bloch-space chord lengths.
  double path_length() const;
};

// Interaction term of the master equation. Traceless and Hermitian for any
// Hermitian input.
Matrix2c dissipator(const Matrix2c& rho, double delta, double gamma);

// Full right-hand side: -i[H0 + f1 H1 + f2 H2, rho] + dissipator at the
// bath coefficients evaluated at time t.
Matrix2c rhs(const Matrix2c& rho, double t, double f1, double f2,
             const EnvironmentParams& env);

// Classical fixed-step RK4 with the control fields held constant over the
// step; bath coefficients are evaluated at the substage times. The result
// is re-hermitized and trace-renormalized. When trace_defect is given it
// receives |tr - 1| of the raw update.
Matrix2c step_rk4_raw(const Matrix2c& rho, double t, double dt, double f1,
                      double f2, const EnvironmentParams& env,
                      double* trace_defect = nullptr);

QubitState step_rk4(const QubitState& rho, double t, double dt, double f1,
                    double f2, const EnvironmentParams& env);

Trajectory integrate_free(const EnvironmentParams& env, const QubitState& rho0,
                          double t_f, double dt);

// x = y = 0, z = -omega0/(2 kT); independent of the initial state.
QubitState equilibrium_state(const EnvironmentParams& env);

// K = |rho sigma_- - sigma_- rho|_F^2, the state factor in the purity rate.
double k_factor(const QubitState& rho);

struct PurityRateSample {
  double t;
  double dp_dt_numeric;  // central difference of the sampled purity
  double predicted;      // -4 K beta(t)
  double k;
  double beta;
};

// Central-difference purity rate against the -4*K*beta prediction at each
// interior sample of a free-evolution trajectory.
std::vector<PurityRateSample> purity_rate_diagnostic(
    const Trajectory& traj, const EnvironmentParams& env);

}  // namespace tclq
