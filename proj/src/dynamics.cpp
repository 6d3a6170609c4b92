#include "tclq/dynamics.hpp"

#include <cmath>

namespace tclq {

namespace {
constexpr Complex kI{0.0, 1.0};

Matrix2c commutator(const Matrix2c& a, const Matrix2c& b) {
  return a * b - b * a;
}
}  // namespace

Matrix2c HamiltonianModel::h0() const { return 0.5 * omega0 * sigma_z(); }

Matrix2c HamiltonianModel::total(double f1, double f2) const {
  return h0() + f1 * sigma_x() + f2 * sigma_y();
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::A: return "A";
    case Branch::B: return "B";
    case Branch::C: return "C";
    case Branch::Free: return "free";
  }
  return "?";
}

double Trajectory::path_length() const {
  double len = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    len += (points[i].bloch - points[i - 1].bloch).norm();
  }
  return len;
}

Matrix2c dissipator(const Matrix2c& rho, double delta, double gamma) {
  const Matrix2c& sm = sigma_minus();
  const Matrix2c& sp = sigma_plus();
  const double b1 = 0.5 * (delta + gamma);
  const double b2 = 0.5 * (delta - gamma);
  return b1 * (commutator(sm * rho, sp) + commutator(sm, rho * sp)) +
         b2 * (commutator(sp * rho, sm) + commutator(sp, rho * sm));
}

Matrix2c rhs(const Matrix2c& rho, double t, double f1, double f2,
             const EnvironmentParams& env) {
  const HamiltonianModel h{env.omega0};
  return -kI * commutator(h.total(f1, f2), rho) +
         dissipator(rho, delta_ht(env, t), gamma_t(env, t));
}

Matrix2c step_rk4_raw(const Matrix2c& rho, double t, double dt, double f1,
                      double f2, const EnvironmentParams& env,
                      double* trace_defect) {
  const Matrix2c k1 = rhs(rho, t, f1, f2, env);
  const Matrix2c k2 = rhs(rho + 0.5 * dt * k1, t + 0.5 * dt, f1, f2, env);
  const Matrix2c k3 = rhs(rho + 0.5 * dt * k2, t + 0.5 * dt, f1, f2, env);
  const Matrix2c k4 = rhs(rho + dt * k3, t + dt, f1, f2, env);
  Matrix2c next = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  const double tr = next.trace().real();
  if (trace_defect != nullptr) {
    *trace_defect = std::abs(next.trace() - Complex{1.0, 0.0});
  }
  next = 0.5 * (next + next.adjoint().eval());
  next /= tr;
  return next;
}

QubitState step_rk4(const QubitState& rho, double t, double dt, double f1,
                    double f2, const EnvironmentParams& env) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be positive");
  return QubitState::unchecked(
      step_rk4_raw(rho.matrix(), t, dt, f1, f2, env));
}

namespace {

TrajectoryPoint make_point(double t, const Matrix2c& m,
                           const EnvironmentParams& env) {
  TrajectoryPoint p;
  p.t = t;
  p.state = QubitState::unchecked(m);
  p.bloch = to_bloch(p.state);
  p.purity = purity(p.state);
  p.coherence = coherence(p.state);
  p.beta = beta_t(env, t);
  return p;
}

void monitor(Trajectory& traj, const TrajectoryPoint& p, double trace_defect) {
  traj.max_trace_defect = std::max(traj.max_trace_defect, trace_defect);
  const double lam = 0.5 * (1.0 - p.bloch.norm());
  if (lam < traj.min_eigenvalue) traj.min_eigenvalue = lam;
  if (lam < kPositivityTol && !traj.non_physical) {
    traj.non_physical = true;
    traj.first_non_physical_t = p.t;
  }
}

}  // namespace

Trajectory integrate_free(const EnvironmentParams& env, const QubitState& rho0,
                          double t_f, double dt) {
  env.validate();
  if (!(dt > 0.0) || !(t_f > 0.0)) {
    throw std::invalid_argument("integrate_free: t_f and dt must be positive");
  }
  const long n_steps = std::lround(t_f / dt);
  Trajectory traj;
  traj.env = env;
  traj.dt = dt;
  traj.points.reserve(n_steps + 1);

  Matrix2c m = rho0.matrix();
  TrajectoryPoint p0 = make_point(0.0, m, env);
  monitor(traj, p0, 0.0);
  traj.points.push_back(std::move(p0));

  for (long k = 0; k < n_steps; ++k) {
    const double t = k * dt;
    double defect = 0.0;
    m = step_rk4_raw(m, t, dt, 0.0, 0.0, env, &defect);
    TrajectoryPoint p = make_point((k + 1) * dt, m, env);
    monitor(traj, p, defect);
    traj.points.push_back(std::move(p));
  }
  return traj;
}

QubitState equilibrium_state(const EnvironmentParams& env) {
  env.validate();
  return from_bloch(0.0, 0.0, -env.omega0 / (2.0 * env.kT));
}

double k_factor(const QubitState& rho) {
  return commutator(rho.matrix(), sigma_minus()).squaredNorm();
}

std::vector<PurityRateSample> purity_rate_diagnostic(
    const Trajectory& traj, const EnvironmentParams& env) {
  std::vector<PurityRateSample> out;
  if (traj.points.size() < 3) return out;
  out.reserve(traj.points.size() - 2);
  for (std::size_t i = 1; i + 1 < traj.points.size(); ++i) {
    const auto& prev = traj.points[i - 1];
    const auto& cur = traj.points[i];
    const auto& next = traj.points[i + 1];
    PurityRateSample s;
    s.t = cur.t;
    s.dp_dt_numeric = (next.purity - prev.purity) / (next.t - prev.t);
    s.k = k_factor(cur.state);
    s.beta = beta_t(env, cur.t);
    s.predicted = -4.0 * s.k * s.beta;
    out.push_back(s);
  }
  return out;
}

}  // namespace tclq
