#pragma once

#include <cmath>
#include <map>
#include <stdexcept>

#include "qcoh/entropy.hpp"

namespace qcoh {

// Analytic lower bounds on the coherence sum C^X + C^Z of a qubit, as pure
// scalar functions of c = c_max(X, Z) and P = Tr[rho^2]. Both live in
// [1/2, 1] for qubits.

enum class BoundKind { MuRe, BertaRe, SanchezRe, KorzekwaRe, Thm2Re, Thm3Cf, Thm4L1 };

inline constexpr BoundKind kAllBoundKinds[] = {
    BoundKind::MuRe,     BoundKind::BertaRe, BoundKind::SanchezRe, BoundKind::KorzekwaRe,
    BoundKind::Thm2Re,   BoundKind::Thm3Cf,  BoundKind::Thm4L1,
};

inline const char* bound_name(BoundKind k) {
  switch (k) {
    case BoundKind::MuRe: return "mu_re";
    case BoundKind::BertaRe: return "berta_re";
    case BoundKind::SanchezRe: return "sanchez_re";
    case BoundKind::KorzekwaRe: return "korzekwa_re";
    case BoundKind::Thm2Re: return "thm2_re";
    case BoundKind::Thm3Cf: return "thm3_cf";
    case BoundKind::Thm4L1: return "thm4_l1";
  }
  return "?";
}

struct BoundRequest {
  BoundKind kind;
  double c;  // c_max
  double p;  // purity
};

/// A bound can be vacuous (negative); both the raw value and its clamp to
/// zero are carried so either plotting convention can be reproduced.
struct BoundValue {
  double raw;
  double clamped;

  static BoundValue of(double raw) { return {raw, std::max(raw, 0.0)}; }
};

namespace detail {
inline double checked_unit_half(double v, const char* what) {
  if (v < 0.5 - kIdentityTol || v > 1.0 + kIdentityTol) {
    throw std::domain_error(std::string(what) + " must lie in [0.5, 1]");
  }
  return std::clamp(v, 0.5, 1.0);
}
}  // namespace detail

/// Larger eigenvalue p of a qubit with purity P: P = 2p^2 - 2p + 1, upper
/// root p = (1 + sqrt(2P - 1)) / 2.
inline double purity_to_p(double purity) {
  const double p = detail::checked_unit_half(purity, "purity");
  return 0.5 * (1.0 + std::sqrt(std::max(0.0, 2.0 * p - 1.0)));
}

/// Entropy of the state H(rho) as a function of purity.
inline double entropy_from_purity(double purity) { return binary_entropy(purity_to_p(purity)); }

// Maassen-Uffink, moved to coherence terms: -log2 c - 2 H(rho).
inline BoundValue bound_mu_re(double c, double purity) {
  c = detail::checked_unit_half(c, "c");
  return BoundValue::of(-std::log2(c) - 2.0 * entropy_from_purity(purity));
}

// Berta et al.: -log2 c - H(rho).
inline BoundValue bound_berta_re(double c, double purity) {
  c = detail::checked_unit_half(c, "c");
  return BoundValue::of(-std::log2(c) - entropy_from_purity(purity));
}

// Sanchez-Ruiz: H((1 + sqrt(2c - 1)) / 2) - 2 H(rho).
inline BoundValue bound_sanchez_re(double c, double purity) {
  c = detail::checked_unit_half(c, "c");
  const double arg = 0.5 * (1.0 + std::sqrt(std::max(0.0, 2.0 * c - 1.0)));
  return BoundValue::of(binary_entropy(arg) - 2.0 * entropy_from_purity(purity));
}

// Korzekwa et al.: -(1 - H(rho)) log2 c.
inline BoundValue bound_korzekwa_re(double c, double purity) {
  c = detail::checked_unit_half(c, "c");
  return BoundValue::of(-(1.0 - entropy_from_purity(purity)) * std::log2(c));
}

// Purity-aware relative-entropy bound:
// H((sqrt(2P-1) (2 sqrt(c) - 1) + 1) / 2) - H(rho).
inline BoundValue bound_thm2_re(double c, double purity) {
  c = detail::checked_unit_half(c, "c");
  const double p = detail::checked_unit_half(purity, "purity");
  const double arg = 0.5 * (std::sqrt(std::max(0.0, 2.0 * p - 1.0)) * (2.0 * std::sqrt(c) - 1.0) + 1.0);
  return BoundValue::of(binary_entropy(arg) - entropy_from_purity(p));
}

// Coherence-of-formation bound:
// H((1 + sqrt(1 - 4 (2P-1) sqrt(c) (1 - sqrt(c)))) / 2).
inline BoundValue bound_thm3_cf(double c, double purity) {
  c = detail::checked_unit_half(c, "c");
  const double p = detail::checked_unit_half(purity, "purity");
  const double sc = std::sqrt(c);
  const double inner = std::max(0.0, 1.0 - 4.0 * (2.0 * p - 1.0) * sc * (1.0 - sc));
  return BoundValue::of(binary_entropy(0.5 * (1.0 + std::sqrt(inner))));
}

// l1 bound, tight: 2 sqrt((2P-1) c (1-c)).
inline BoundValue bound_thm4_l1(double c, double purity) {
  c = detail::checked_unit_half(c, "c");
  const double p = detail::checked_unit_half(purity, "purity");
  return BoundValue::of(2.0 * std::sqrt(std::max(0.0, (2.0 * p - 1.0) * c * (1.0 - c))));
}

inline BoundValue evaluate_bound(BoundKind kind, double c, double purity) {
  switch (kind) {
    case BoundKind::MuRe: return bound_mu_re(c, purity);
    case BoundKind::BertaRe: return bound_berta_re(c, purity);
    case BoundKind::SanchezRe: return bound_sanchez_re(c, purity);
    case BoundKind::KorzekwaRe: return bound_korzekwa_re(c, purity);
    case BoundKind::Thm2Re: return bound_thm2_re(c, purity);
    case BoundKind::Thm3Cf: return bound_thm3_cf(c, purity);
    case BoundKind::Thm4L1: return bound_thm4_l1(c, purity);
  }
  throw std::invalid_argument("evaluate_bound: unknown kind");
}

inline std::map<BoundKind, BoundValue> evaluate_all(double c, double purity) {
  std::map<BoundKind, BoundValue> out;
  for (BoundKind k : kAllBoundKinds) out.emplace(k, evaluate_bound(k, c, purity));
  return out;
}

}  // namespace qcoh
