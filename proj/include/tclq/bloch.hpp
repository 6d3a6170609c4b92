// Two-level state algebra: density matrices, Bloch vectors, purity,
// coherence, trace distance. Everything here is a pure value operation.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace tclq {

using Matrix2c = Eigen::Matrix2cd;
using Complex = std::complex<double>;

// Pauli matrices, sigma_z = diag(1, -1); basis order puts diag(0,1) at the
// South pole of the Bloch sphere.
const Matrix2c& sigma_x();
const Matrix2c& sigma_y();
const Matrix2c& sigma_z();
const Matrix2c& sigma_minus();  // (sigma_x - i sigma_y)/2, lowering
const Matrix2c& sigma_plus();   // (sigma_x + i sigma_y)/2, raising
const Matrix2c& identity2();

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPositivityTol = -1e-6;  // integration drift allowance
constexpr double kBlochNormTol = 1e-6;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  double squared_norm() const { return x * x + y * y + z * z; }
};

BlochVector operator-(const BlochVector& a, const BlochVector& b);

// Hermitian, unit-trace 2x2 density matrix. Validation happens at
// construction; `strict` additionally requires the minimum eigenvalue to
// stay above the positivity tolerance.
class QubitState {
 public:
  explicit QubitState(const Matrix2c& m, bool strict = false);

  // Skips validation; for integrator internals that re-hermitize and
  // renormalize every step.
  static QubitState unchecked(const Matrix2c& m);

  const Matrix2c& matrix() const { return m_; }

  bool operator==(const QubitState& other) const { return m_ == other.m_; }

 private:
  QubitState() = default;
  Matrix2c m_;
};

BlochVector to_bloch(const QubitState& rho);
QubitState from_bloch(const BlochVector& v, bool strict = false);
QubitState from_bloch(double x, double y, double z, bool strict = false);

double purity(const QubitState& rho);
double coherence(const QubitState& rho);
double trace_distance(const QubitState& a, const QubitState& b);

// (1 - |r|)/2 for a unit-trace Hermitian 2x2 matrix.
double min_eigenvalue(const QubitState& rho);

}  // namespace tclq
