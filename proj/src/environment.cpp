#include "tclq/environment.hpp"

#include <algorithm>
#include <cmath>

namespace tclq {

void EnvironmentParams::validate() const {
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("env.alpha: must be >= 0");
  }
  if (alpha * alpha > kWeakCouplingMaxAlphaSq * (1.0 + 1e-9)) {
    throw std::invalid_argument(
        "env.alpha: alpha^2 = " + std::to_string(alpha * alpha) +
        " exceeds the weak-coupling bound 0.05");
  }
  if (!(omega0 > 0.0)) {
    throw std::invalid_argument("env.omega0: must be positive");
  }
  if (!(kT > 0.0)) {
    throw std::invalid_argument("env.kT: must be positive");
  }
  if (!(r > 0.0)) {
    throw std::invalid_argument("env.r: must be positive");
  }
}

std::vector<std::string> EnvironmentParams::warnings() const {
  std::vector<std::string> out;
  if (kT < 10.0 * omega0) {
    out.push_back(
        "kT < 10*omega0: outside the high-temperature regime the "
        "coefficient model assumes");
  }
  return out;
}

double gamma_t(const EnvironmentParams& env, double t) {
  const double a2 = env.alpha * env.alpha;
  const double pre = a2 * env.omega0 * env.r * env.r / (1.0 + env.r * env.r);
  const double w = env.omega0 * t;
  return pre * (1.0 - std::exp(-env.r * w) *
                          (std::cos(w) + env.r * std::sin(w)));
}

double delta_ht(const EnvironmentParams& env, double t) {
  const double a2 = env.alpha * env.alpha;
  const double pre = 2.0 * a2 * env.kT * env.r * env.r / (1.0 + env.r * env.r);
  const double w = env.omega0 * t;
  return pre * (1.0 - std::exp(-env.r * w) *
                          (std::cos(w) - std::sin(w) / env.r));
}

double beta_t(const EnvironmentParams& env, double t) {
  const double a2kT = env.alpha * env.alpha * env.kT;
  const double r2 = env.r * env.r;
  const double w = env.omega0 * t;
  return a2kT * r2 / (1.0 + r2) +
         a2kT * env.r / std::sqrt(1.0 + r2) * std::exp(-env.r * w) *
             std::sin(w - std::atan(env.r));
}

double beta1_t(const EnvironmentParams& env, double t) {
  return 0.5 * (delta_ht(env, t) + gamma_t(env, t));
}

double beta2_t(const EnvironmentParams& env, double t) {
  return 0.5 * (delta_ht(env, t) - gamma_t(env, t));
}

SteadyRates steady_rates(const EnvironmentParams& env) {
  const double a2 = env.alpha * env.alpha;
  const double frac = env.r * env.r / (1.0 + env.r * env.r);
  SteadyRates s;
  s.gamma_M = a2 * env.omega0 * frac;
  s.delta_M = 2.0 * a2 * env.kT * frac;
  s.beta_M = 0.5 * s.delta_M;
  return s;
}

double envelope(const EnvironmentParams& env, double t) {
  const double a2kT = env.alpha * env.alpha * env.kT;
  const double r2 = env.r * env.r;
  return a2kT * r2 / (1.0 + r2) +
         a2kT * env.r / std::sqrt(1.0 + r2) * std::exp(-env.r * env.omega0 * t);
}

double settle_time(const EnvironmentParams& env, double rel_tol) {
  const SteadyRates s = steady_rates(env);
  const double amp =
      env.alpha * env.alpha * env.kT * env.r / std::sqrt(1.0 + env.r * env.r);
  // envelope(t) - beta_M = amp * exp(-r omega0 t) <= rel_tol * beta_M
  return std::log(amp / (rel_tol * s.beta_M)) / (env.r * env.omega0);
}

double min_beta(const EnvironmentParams& env) {
  const double period = 2.0 * M_PI / env.omega0;
  const double t_max = 20.0 * period;
  constexpr int kGridPoints = 100000;
  double m = beta_t(env, 0.0);
  for (int i = 1; i <= kGridPoints; ++i) {
    m = std::min(m, beta_t(env, t_max * i / kGridPoints));
  }
  // Stationary points of beta lie at omega0 t = pi/2 + k pi.
  for (int k = 0; k < 40; ++k) {
    const double t = (M_PI_2 + k * M_PI) / env.omega0;
    if (t <= t_max) m = std::min(m, beta_t(env, t));
  }
  return m;
}

double markovian_crossover(const EnvironmentParams& env_template, double r_lo,
                           double r_hi) {
  EnvironmentParams env = env_template;
  auto m_of = [&env](double r) {
    EnvironmentParams e = env;
    e.r = r;
    return min_beta(e);
  };
  if (!(m_of(r_lo) < 0.0) || !(m_of(r_hi) >= 0.0)) {
    throw std::invalid_argument(
        "markovian_crossover: bracket does not straddle the sign change of "
        "min beta");
  }
  constexpr double kTolR = 1e-4;
  while (r_hi - r_lo > kTolR) {
    const double mid = 0.5 * (r_lo + r_hi);
    if (m_of(mid) < 0.0) {
      r_lo = mid;
    } else {
      r_hi = mid;
    }
  }
  return 0.5 * (r_lo + r_hi);
}

}  // namespace tclq
