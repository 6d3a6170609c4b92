// Closed-form Ohmic-bath coefficients for the high-temperature
// time-convolutionless master equation: dissipation gamma(t), diffusion
// Delta(t), decay rate beta(t), their long-time limits, the envelope of
// beta, and the cut-off ratio at which beta stops going negative.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tclq {

// Units: hbar = k_B = 1, time in a.u.; kT is an energy in the same units
// as omega0.
struct EnvironmentParams {
  double alpha = 0.1;    // system-bath coupling constant
  double omega0 = 10.0;  // two-level transition frequency
  double kT = 300.0;     // environment temperature (energy units)
  double r = 0.05;       // cut-off ratio omega_c / omega0

  double omega_c() const { return r * omega0; }

  // Throws std::invalid_argument on out-of-range parameters. alpha = 0 is
  // allowed (closed system); alpha^2 above the weak-coupling bound is a
  // hard error because the perturbative model breaks down there.
  void validate() const;

  // Non-fatal model-applicability notes, e.g. kT below the
  // high-temperature regime.
  std::vector<std::string> warnings() const;
};

constexpr double kWeakCouplingMaxAlphaSq = 0.05;

double gamma_t(const EnvironmentParams& env, double t);
double delta_ht(const EnvironmentParams& env, double t);
double beta_t(const EnvironmentParams& env, double t);

// (Delta + gamma)/2 and (Delta - gamma)/2; the dissipator consumes both.
double beta1_t(const EnvironmentParams& env, double t);
double beta2_t(const EnvironmentParams& env, double t);

struct SteadyRates {
  double gamma_M;
  double delta_M;
  double beta_M;
};
SteadyRates steady_rates(const EnvironmentParams& env);

// Envelope of beta(t): monotone nonincreasing, >= beta(t) for all t.
double envelope(const EnvironmentParams& env, double t);

// First time at which the envelope deviation from beta_M drops below
// rel_tol * beta_M.
double settle_time(const EnvironmentParams& env, double rel_tol = 0.01);

// min over t of beta(t; r): dense grid over the first twenty periods plus
// the analytic stationary points omega0*t = pi/2 + k*pi.
double min_beta(const EnvironmentParams& env);

// Bisection in r for the zero of min_beta. Requires min_beta(r_lo) < 0 and
// min_beta(r_hi) >= 0; throws std::invalid_argument otherwise. The result
// is independent of alpha and kT (both scale beta multiplicatively).
double markovian_crossover(const EnvironmentParams& env_template, double r_lo,
                           double r_hi);

}  // namespace tclq
