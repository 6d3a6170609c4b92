#include "tclq/control.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tclq {

namespace {
constexpr Complex kI{0.0, 1.0};
}

void ControlParams::validate() const {
  if (!(g1 > 0.0)) throw std::invalid_argument("control.g1: must be positive");
  if (!(g2 > 0.0)) throw std::invalid_argument("control.g2: must be positive");
  if (!(theta > 0.0)) {
    throw std::invalid_argument("control.theta: must be positive");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("control.epsilon: must be positive");
  }
  if (!(dt > 0.0)) throw std::invalid_argument("control.dt: must be positive");
  if (!(t_f > 0.0)) throw std::invalid_argument("control.t_f: must be positive");
  if (f_max && !(*f_max > 0.0)) {
    throw std::invalid_argument("control.f_max: must be positive when set");
  }
  if (n_stall < 1) throw std::invalid_argument("control.n_stall: must be >= 1");
}

double lyapunov_v(const QubitState& rho_s, const QubitState& rho_f) {
  const Matrix2c d = rho_s.matrix() - rho_f.matrix();
  return 0.5 * (d * d).trace().real();
}

std::pair<double, double> t_functions(const QubitState& rho_s,
                                      const QubitState& rho_f) {
  const BlochVector r = to_bloch(rho_s);
  const BlochVector rf = to_bloch(rho_f);
  return {rf.y * r.z - rf.z * r.y, rf.z * r.x - rf.x * r.z};
}

double drift_c(const QubitState& rho_s, const QubitState& rho_f,
               const EnvironmentParams& env, double t) {
  const Matrix2c& rho = rho_s.matrix();
  const HamiltonianModel h{env.omega0};
  const Matrix2c drift =
      dissipator(rho, delta_ht(env, t), gamma_t(env, t)) -
      kI * (h.h0() * rho - rho * h.h0());
  const Complex c = (drift * (rho - rho_f.matrix())).trace();
  if (std::abs(c.imag()) > 1e-10) {
    throw std::runtime_error("drift_c: trace has a non-negligible imaginary part");
  }
  return c.real();
}

ControlDecision control_step(const QubitState& rho_s, const QubitState& rho_f,
                             const ControlParams& params,
                             const EnvironmentParams& env, double t) {
  ControlDecision d;
  const auto [t1, t2] = t_functions(rho_s, rho_f);
  d.T1 = t1;
  d.T2 = t2;
  d.C = drift_c(rho_s, rho_f, env, t);
  d.V = lyapunov_v(rho_s, rho_f);

  if (std::abs(t1) > params.theta) {
    d.branch = Branch::A;
    d.f1 = -d.C / t1;
    d.f2 = -params.g2 * t2;
  } else if (std::abs(t2) > params.theta) {
    d.branch = Branch::B;
    d.f1 = -params.g1 * t1;
    d.f2 = -d.C / t2;
  } else {
    d.branch = Branch::C;
    d.f1 = 0.0;
    d.f2 = 0.0;
  }

  if (params.f_max) {
    const double cap = *params.f_max;
    if (std::abs(d.f1) > cap || std::abs(d.f2) > cap) {
      d.saturated = true;
      d.f1 = std::clamp(d.f1, -cap, cap);
      d.f2 = std::clamp(d.f2, -cap, cap);
    }
  }
  return d;
}

TransferResult integrate_controlled(const EnvironmentParams& env,
                                    const QubitState& rho0,
                                    const QubitState& rho_f,
                                    const ControlParams& params) {
  env.validate();
  params.validate();

  TransferResult res;
  Trajectory& traj = res.trajectory;
  traj.env = env;
  traj.dt = params.dt;

  const long n_steps = std::lround(params.t_f / params.dt);
  traj.points.reserve(n_steps + 1);

  Matrix2c m = rho0.matrix();
  res.v_min = std::numeric_limits<double>::infinity();
  long c_streak = 0;

  for (long k = 0; k <= n_steps; ++k) {
    const double t = k * params.dt;
    const QubitState state = QubitState::unchecked(m);
    const ControlDecision d = control_step(state, rho_f, params, env, t);

    TrajectoryPoint p;
    p.t = t;
    p.state = state;
    p.bloch = to_bloch(state);
    p.purity = purity(state);
    p.coherence = coherence(state);
    p.beta = beta_t(env, t);
    p.f1 = d.f1;
    p.f2 = d.f2;
    p.V = d.V;
    p.branch = d.branch;

    traj.max_trace_defect = std::max(traj.max_trace_defect, 0.0);
    const double lam = 0.5 * (1.0 - p.bloch.norm());
    if (lam < traj.min_eigenvalue) traj.min_eigenvalue = lam;
    if (lam < kPositivityTol && !traj.non_physical) {
      traj.non_physical = true;
      traj.first_non_physical_t = t;
    }
    traj.points.push_back(p);

    if (d.V < res.v_min) {
      res.v_min = d.V;
      res.t_at_v_min = t;
    }

    if (d.V <= params.epsilon) {
      res.converged = true;
      break;
    }

    if (d.branch == Branch::C) {
      ++res.stall.branch_c_steps;
      ++c_streak;
      res.stall.longest_c_streak =
          std::max(res.stall.longest_c_streak, c_streak);
      if (c_streak >= params.n_stall) {
        res.stall.stalled = true;
        res.stall.t_stalled = t;
        break;
      }
    } else {
      c_streak = 0;
    }

    if (k == n_steps) break;
    double defect = 0.0;
    m = step_rk4_raw(m, t, params.dt, d.f1, d.f2, env, &defect);
    traj.max_trace_defect = std::max(traj.max_trace_defect, defect);
  }
  return res;
}

}  // namespace tclq
