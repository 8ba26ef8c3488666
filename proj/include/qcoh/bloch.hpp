#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcoh/states.hpp"

namespace qcoh {

/// Real 3-vector r with |r| <= 1; rho = (I + r.sigma)/2. Convention:
/// |0><0| maps to (0, 0, 1), Pauli order (x, y, z).
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }

  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }

  BlochVector scaled(double s) const { return {s * x, s * y, s * z}; }
};

inline BlochVector bloch_from_state(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::invalid_argument("bloch_from_state: qubit states only");
  const Complex off = rho(0, 1);
  return {2.0 * off.real(), -2.0 * off.imag(), rho(0, 0).real() - rho(1, 1).real()};
}

inline DensityMatrix state_from_bloch(const BlochVector& r) {
  if (r.norm() > 1.0 + kIdentityTol) {
    throw std::domain_error("state_from_bloch: Bloch vector norm exceeds 1");
  }
  ComplexMatrix m(2);
  m(0, 0) = 0.5 * (1.0 + r.z);
  m(1, 1) = 0.5 * (1.0 - r.z);
  m(0, 1) = 0.5 * Complex(r.x, -r.y);
  m(1, 0) = 0.5 * Complex(r.x, r.y);
  return DensityMatrix(std::move(m));
}

/// Pure qubit state pointing along the unit direction u.
inline PureState pure_state_from_direction(const BlochVector& u) {
  const double n = u.norm();
  if (std::abs(n - 1.0) > kStructuralTol) {
    throw std::invalid_argument("pure_state_from_direction: direction is not a unit vector");
  }
  const double theta = std::acos(std::clamp(u.z / n, -1.0, 1.0));
  const double phi = std::atan2(u.y, u.x);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return PureState(2, {Complex(c, 0.0), Complex(s * std::cos(phi), s * std::sin(phi))});
}

/// Measurement basis along +u / -u.
inline OrthonormalBasis basis_from_direction(const BlochVector& u) {
  return OrthonormalBasis({pure_state_from_direction(u), pure_state_from_direction(u.scaled(-1.0))});
}

/// |<x|z>|^2 for pure qubit states whose Bloch directions subtend the given
/// angle: cos^2(alpha/2). Arguments are clamped into [0, pi].
inline double bloch_angle_overlap(double alpha) {
  alpha = std::clamp(alpha, 0.0, std::numbers::pi);
  const double c = std::cos(0.5 * alpha);
  return c * c;
}

/// Angle in [0, pi] between two nonzero 3-vectors.
inline double angle_between(const BlochVector& a, const BlochVector& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na <= 0.0 || nb <= 0.0) throw std::invalid_argument("angle_between: zero vector");
  return std::acos(std::clamp(a.dot(b) / (na * nb), -1.0, 1.0));
}

}  // namespace qcoh
