#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "qcoh/states.hpp"

namespace qcoh {

// All entropies are in bits.

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

/// H(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0. Inputs within
/// 1e-12 of [0,1] are clamped; anything further out is a domain error.
inline double binary_entropy(double x) {
  if (x < -kIdentityTol || x > 1.0 + kIdentityTol) {
    throw std::domain_error("binary_entropy: argument outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  return -xlog2x(x) - xlog2x(1.0 - x);
}

/// Shannon entropy of a probability vector. Entries in [-1e-10, 0) are
/// treated as exact zeros, which is how eigenvalue noise gets absorbed.
inline double shannon_entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p < 0.0) {
      if (p < -kStructuralTol) throw std::domain_error("shannon_entropy: negative probability");
      continue;
    }
    h -= xlog2x(p);
  }
  return std::max(h, 0.0);
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
  if (rho.dim() == 2) {
    // Closed form: eigenvalues are mean +- radius of the 2x2 block.
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(rho(0, 1)));
    const double hi = std::clamp(0.5 * (a + d) + radius, 0.0, 1.0);
    return binary_entropy(hi);
  }
  const auto sys = detail::eigen_hermitian(rho.matrix(), kStructuralTol);
  return shannon_entropy(sys.values);
}

}  // namespace qcoh
