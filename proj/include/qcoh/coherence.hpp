#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qcoh/entropy.hpp"
#include "qcoh/rng.hpp"
#include "qcoh/states.hpp"

namespace qcoh {

enum class Measure { RelativeEntropy, Formation, L1 };

inline const char* measure_name(Measure m) {
  switch (m) {
    case Measure::RelativeEntropy: return "relative_entropy";
    case Measure::Formation: return "formation";
    case Measure::L1: return "l1";
  }
  return "?";
}

/// A coherence amount: bits for the entropy-based measures, dimensionless
/// for l1. Tiny negative floating-point results are clamped to zero.
struct CoherenceValue {
  Measure kind;
  double value;
};

namespace detail {
inline double clamp_coherence(double v) {
  if (v < -1e-9) throw std::domain_error("coherence value unexpectedly negative");
  return std::max(v, 0.0);
}
}  // namespace detail

/// Outcome distribution of measuring rho in basis b.
inline std::vector<double> outcome_distribution(const DensityMatrix& rho, const OrthonormalBasis& b) {
  if (rho.dim() != b.dim()) throw std::invalid_argument("outcome_distribution: dimension mismatch");
  std::vector<double> probs;
  probs.reserve(static_cast<std::size_t>(b.dim()));
  for (const PureState& v : b.vectors()) probs.push_back(rho.outcome_probability(v));
  return probs;
}

/// Removes all off-diagonal elements of rho in the given basis:
/// sum_i <b_i|rho|b_i> |b_i><b_i|. Trace-preserving and idempotent.
inline DensityMatrix dephase(const DensityMatrix& rho, const OrthonormalBasis& b) {
  const std::vector<double> probs = outcome_distribution(rho, b);
  ComplexMatrix m(rho.dim());
  for (int k = 0; k < b.dim(); ++k) {
    const PureState& v = b[k];
    const double p = probs[static_cast<std::size_t>(k)];
    for (int i = 0; i < rho.dim(); ++i)
      for (int j = 0; j < rho.dim(); ++j) m(i, j) += p * v[i] * std::conj(v[j]);
  }
  return DensityMatrix(std::move(m));
}

/// C_RE(rho, B) = H(rho dephased in B) - H(rho). The dephased state is
/// diagonal in B, so its entropy is the Shannon entropy of the outcome
/// distribution.
inline CoherenceValue coherence_relative_entropy(const DensityMatrix& rho, const OrthonormalBasis& b) {
  const std::vector<double> probs = outcome_distribution(rho, b);
  const double value = shannon_entropy(probs) - von_neumann_entropy(rho);
  return {Measure::RelativeEntropy, detail::clamp_coherence(value)};
}

/// C_l1(rho, B) = sum of |<b_i|rho|b_j>| over i != j.
inline CoherenceValue coherence_l1(const DensityMatrix& rho, const OrthonormalBasis& b) {
  if (rho.dim() != b.dim()) throw std::invalid_argument("coherence_l1: dimension mismatch");
  const int d = rho.dim();
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Complex acc = 0.0;
      for (int r = 0; r < d; ++r) {
        Complex row = 0.0;
        for (int s = 0; s < d; ++s) row += rho(r, s) * b[j][s];
        acc += std::conj(b[i][r]) * row;
      }
      sum += 2.0 * std::abs(acc);
    }
  }
  return {Measure::L1, detail::clamp_coherence(sum)};
}

/// Qubit closed form of the coherence of formation:
/// h2((1 + sqrt(1 - C_l1^2)) / 2). The l1 amount enters squared; the
/// decomposition oracle below adjudicates this against brute force.
inline CoherenceValue coherence_formation_qubit(const DensityMatrix& rho, const OrthonormalBasis& b) {
  if (rho.dim() != 2) throw std::invalid_argument("coherence_formation_qubit: unsupported dimension (qubits only)");
  const double l1 = coherence_l1(rho, b).value;
  const double inner = std::max(0.0, 1.0 - l1 * l1);
  const double value = binary_entropy(0.5 * (1.0 + std::sqrt(inner)));
  return {Measure::Formation, detail::clamp_coherence(value)};
}

namespace detail {

/// C_RE of a pure state is just the entropy of its outcome distribution.
inline double pure_state_re_coherence(const std::vector<Complex>& amps, const OrthonormalBasis& b) {
  double h = 0.0;
  for (const PureState& v : b.vectors()) {
    Complex a = 0.0;
    for (int i = 0; i < b.dim(); ++i) a += std::conj(v[i]) * amps[static_cast<std::size_t>(i)];
    h -= xlog2x(std::norm(a));
  }
  return std::max(h, 0.0);
}

/// Orthonormalizes the r columns of a K x r complex matrix in place
/// (modified Gram-Schmidt). Returns false on rank deficiency.
inline bool orthonormalize_columns(std::vector<Complex>& m, int rows, int cols) {
  for (int j = 0; j < cols; ++j) {
    for (int k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (int i = 0; i < rows; ++i) proj += std::conj(m[static_cast<std::size_t>(i) * cols + k]) * m[static_cast<std::size_t>(i) * cols + j];
      for (int i = 0; i < rows; ++i) m[static_cast<std::size_t>(i) * cols + j] -= proj * m[static_cast<std::size_t>(i) * cols + k];
    }
    double norm2 = 0.0;
    for (int i = 0; i < rows; ++i) norm2 += std::norm(m[static_cast<std::size_t>(i) * cols + j]);
    if (norm2 < 1e-24) return false;
    const double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < rows; ++i) m[static_cast<std::size_t>(i) * cols + j] *= inv;
  }
  return true;
}

}  // namespace detail

/// Brute-force upper bound on the coherence of formation: the minimum of
/// sum_e q_e C_RE(|phi_e>) over sampled K-element decompositions of rho.
/// Every K x rank isometry V yields a valid decomposition with
/// |phi_e~> = sum_i V_ei sqrt(lambda_i) |v_i>, so each trial is an upper
/// bound and the minimum converges onto the true roof value.
///
/// Trials alternate between fresh Haar-like draws and shrinking Gaussian
/// perturbations of the best isometry found so far; both are valid samples
/// and the second makes the minimum converge fast. Deterministic for a
/// fixed seed.
inline double cf_oracle(const DensityMatrix& rho, const OrthonormalBasis& b, int ensembles, long trials,
                        std::uint64_t seed = 0) {
  if (rho.dim() != 2) throw std::invalid_argument("cf_oracle: unsupported dimension (qubits only)");
  if (ensembles < 2 || ensembles > 4) throw std::invalid_argument("cf_oracle: ensemble count must be 2, 3, or 4");
  if (trials < 1) throw std::invalid_argument("cf_oracle: trials must be positive");

  const auto eig = hermitian_eigen(rho);
  std::vector<double> sqrt_lambda;
  std::vector<const PureState*> eigvecs;
  for (const auto& [lambda, vec] : eig) {
    if (lambda > 1e-14) {
      sqrt_lambda.push_back(std::sqrt(lambda));
      eigvecs.push_back(&vec);
    }
  }
  const int rank = static_cast<int>(sqrt_lambda.size());
  const int k = ensembles;
  const int d = rho.dim();

  SplitMix64 rng(seed);
  std::vector<Complex> isometry(static_cast<std::size_t>(k) * rank);
  std::vector<Complex> best_isometry;
  std::vector<Complex> element(static_cast<std::size_t>(d));
  double best = std::numeric_limits<double>::infinity();

  for (long t = 0; t < trials; ++t) {
    const bool perturb = !best_isometry.empty() && (t % 2 == 1);
    do {
      if (perturb) {
        // Step size decays geometrically over the trial budget.
        const double sigma = 0.3 * std::pow(1e-4, static_cast<double>(t) / static_cast<double>(trials));
        for (std::size_t i = 0; i < isometry.size(); ++i) {
          isometry[i] = best_isometry[i] + sigma * Complex(rng.gaussian(), rng.gaussian());
        }
      } else {
        for (Complex& e : isometry) e = Complex(rng.gaussian(), rng.gaussian());
      }
    } while (!detail::orthonormalize_columns(isometry, k, rank));

    double avg = 0.0;
    for (int e = 0; e < k; ++e) {
      std::fill(element.begin(), element.end(), Complex(0.0, 0.0));
      for (int i = 0; i < rank; ++i) {
        const Complex w = isometry[static_cast<std::size_t>(e) * rank + i] * sqrt_lambda[static_cast<std::size_t>(i)];
        const auto& amps = eigvecs[static_cast<std::size_t>(i)]->amplitudes();
        for (int a = 0; a < d; ++a) element[static_cast<std::size_t>(a)] += w * amps[static_cast<std::size_t>(a)];
      }
      double weight = 0.0;
      for (const Complex& a : element) weight += std::norm(a);
      if (weight < 1e-14) continue;
      const double inv = 1.0 / std::sqrt(weight);
      for (Complex& a : element) a *= inv;
      avg += weight * detail::pure_state_re_coherence(element, b);
    }
    if (avg < best) {
      best = avg;
      best_isometry = isometry;
    }
  }
  return best;
}

}  // namespace qcoh
