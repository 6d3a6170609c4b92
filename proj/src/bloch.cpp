#include "tclq/bloch.hpp"

#include <cmath>

namespace tclq {

namespace {
constexpr Complex kI{0.0, 1.0};
}

const Matrix2c& sigma_x() {
  static const Matrix2c m = (Matrix2c() << 0, 1, 1, 0).finished();
  return m;
}

const Matrix2c& sigma_y() {
  static const Matrix2c m = (Matrix2c() << 0, -kI, kI, 0).finished();
  return m;
}

const Matrix2c& sigma_z() {
  static const Matrix2c m = (Matrix2c() << 1, 0, 0, -1).finished();
  return m;
}

const Matrix2c& sigma_minus() {
  static const Matrix2c m = (Matrix2c() << 0, 0, 1, 0).finished();
  return m;
}

const Matrix2c& sigma_plus() {
  static const Matrix2c m = (Matrix2c() << 0, 1, 0, 0).finished();
  return m;
}

const Matrix2c& identity2() {
  static const Matrix2c m = Matrix2c::Identity();
  return m;
}

double BlochVector::norm() const { return std::sqrt(squared_norm()); }

BlochVector operator-(const BlochVector& a, const BlochVector& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

QubitState::QubitState(const Matrix2c& m, bool strict) : m_(m) {
  if ((m_ - m_.adjoint()).norm() > kHermitianTol) {
    throw std::invalid_argument("QubitState: matrix is not Hermitian");
  }
  if (std::abs(m_.trace() - Complex{1.0, 0.0}) > kTraceTol) {
    throw std::invalid_argument("QubitState: trace is not 1");
  }
  if (strict && min_eigenvalue(*this) < kPositivityTol) {
    throw std::invalid_argument("QubitState: not positive semidefinite");
  }
}

QubitState QubitState::unchecked(const Matrix2c& m) {
  QubitState s;
  s.m_ = m;
  return s;
}

BlochVector to_bloch(const QubitState& rho) {
  const Matrix2c& m = rho.matrix();
  // Entry arithmetic; identical to tr(rho sigma_k) for Hermitian m.
  return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(),
          (m(0, 0) - m(1, 1)).real()};
}

QubitState from_bloch(const BlochVector& v, bool strict) {
  if (strict && v.norm() > 1.0 + kBlochNormTol) {
    throw std::invalid_argument("from_bloch: vector leaves the Bloch ball");
  }
  Matrix2c m;
  m << Complex{1.0 + v.z, 0.0}, Complex{v.x, -v.y},
       Complex{v.x, v.y}, Complex{1.0 - v.z, 0.0};
  return QubitState::unchecked(0.5 * m);
}

QubitState from_bloch(double x, double y, double z, bool strict) {
  return from_bloch(BlochVector{x, y, z}, strict);
}

double purity(const QubitState& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

double coherence(const QubitState& rho) {
  return 2.0 * std::abs(rho.matrix()(0, 1));
}

double trace_distance(const QubitState& a, const QubitState& b) {
  return 0.5 * (to_bloch(a) - to_bloch(b)).norm();
}

double min_eigenvalue(const QubitState& rho) {
  return 0.5 * (1.0 - to_bloch(rho).norm());
}

}  // namespace tclq
