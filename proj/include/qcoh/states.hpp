#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcoh/complex_matrix.hpp"

namespace qcoh {

inline constexpr double kStructuralTol = 1e-10;  // validation of physical invariants
inline constexpr double kIdentityTol = 1e-12;    // exact numeric identities

/// Normalized state vector in C^d.
class PureState {
 public:
  PureState(int dim, std::vector<Complex> amplitudes) : dim_(dim), amplitudes_(std::move(amplitudes)) {
    if (dim_ < 1 || amplitudes_.size() != static_cast<std::size_t>(dim_)) {
      throw std::invalid_argument("PureState: amplitude count does not match dimension");
    }
    double norm2 = 0.0;
    for (const Complex& a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 2.0 * kStructuralTol) {
      throw std::invalid_argument("PureState: vector is not unit norm");
    }
  }

  /// Normalizes an arbitrary nonzero vector.
  static PureState normalized(std::vector<Complex> v) {
    double norm2 = 0.0;
    for (const Complex& a : v) norm2 += std::norm(a);
    if (norm2 <= 0.0 || !std::isfinite(norm2)) {
      throw std::invalid_argument("PureState: cannot normalize zero or non-finite vector");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : v) a *= inv;
    return PureState(static_cast<int>(v.size()), std::move(v));
  }

  int dim() const { return dim_; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  const Complex& operator[](int i) const { return amplitudes_[static_cast<std::size_t>(i)]; }

  Complex inner(const PureState& other) const {  // <this|other>
    if (dim_ != other.dim_) throw std::invalid_argument("PureState: dimension mismatch");
    Complex acc = 0.0;
    for (int i = 0; i < dim_; ++i) acc += std::conj(amplitudes_[static_cast<std::size_t>(i)]) * other[i];
    return acc;
  }

  ComplexMatrix projector() const {
    ComplexMatrix p(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        p(i, j) = amplitudes_[static_cast<std::size_t>(i)] * std::conj(amplitudes_[static_cast<std::size_t>(j)]);
    return p;
  }

 private:
  int dim_;
  std::vector<Complex> amplitudes_;
};

/// Squared overlap |<u|v>|^2. Symmetric and invariant under global phases.
inline double overlap(const PureState& u, const PureState& v) {
  const double value = std::norm(u.inner(v));
  return std::min(value, 1.0);
}

/// d mutually orthogonal unit vectors — a measurement basis.
class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(std::vector<PureState> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw std::invalid_argument("OrthonormalBasis: empty basis");
    const int d = vectors_.front().dim();
    if (vectors_.size() != static_cast<std::size_t>(d)) {
      throw std::invalid_argument("OrthonormalBasis: basis must contain dim vectors");
    }
    for (const PureState& v : vectors_) {
      if (v.dim() != d) throw std::invalid_argument("OrthonormalBasis: dimension mismatch");
    }
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      for (std::size_t j = i + 1; j < vectors_.size(); ++j) {
        if (std::abs(vectors_[i].inner(vectors_[j])) > kStructuralTol) {
          throw std::invalid_argument("OrthonormalBasis: vectors are not orthogonal");
        }
      }
    }
  }

  static OrthonormalBasis computational(int dim) {
    std::vector<PureState> vs;
    vs.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      std::vector<Complex> amps(static_cast<std::size_t>(dim), Complex(0.0, 0.0));
      amps[static_cast<std::size_t>(i)] = 1.0;
      vs.emplace_back(dim, std::move(amps));
    }
    return OrthonormalBasis(std::move(vs));
  }

  int dim() const { return vectors_.front().dim(); }
  const std::vector<PureState>& vectors() const { return vectors_; }
  const PureState& operator[](int i) const { return vectors_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<PureState> vectors_;
};

/// Hermitian, PSD, unit-trace matrix: the state rho. Construction validates
/// all three invariants and names the violated one in the error message.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    const double scale = std::max(1.0, matrix_.max_abs());
    if (matrix_.hermiticity_defect() > kStructuralTol * scale) {
      throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace().real() - 1.0) > kStructuralTol || std::abs(matrix_.trace().imag()) > kStructuralTol) {
      throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    const auto sys = detail::eigen_hermitian(matrix_, kStructuralTol);
    if (sys.values.back() < -kStructuralTol) {
      throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
    }
  }

  static DensityMatrix pure(const PureState& psi) { return DensityMatrix(psi.projector()); }

  static DensityMatrix maximally_mixed(int dim) {
    return DensityMatrix(ComplexMatrix::identity(dim) * Complex(1.0 / dim, 0.0));
  }

  int dim() const { return matrix_.dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const Complex& operator()(int i, int j) const { return matrix_(i, j); }

  double purity() const {
    double acc = 0.0;
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) acc += std::norm(matrix_(i, j));
    return acc;
  }

  /// <b|rho|b>, the outcome probability for basis vector b.
  double outcome_probability(const PureState& b) const {
    if (b.dim() != dim()) throw std::invalid_argument("DensityMatrix: dimension mismatch");
    Complex acc = 0.0;
    for (int i = 0; i < dim(); ++i) {
      Complex row = 0.0;
      for (int j = 0; j < dim(); ++j) row += matrix_(i, j) * b[j];
      acc += std::conj(b[i]) * row;
    }
    return std::clamp(acc.real(), 0.0, 1.0);
  }

 private:
  ComplexMatrix matrix_;
};

/// Spectral decomposition with eigenvalues sorted descending and orthonormal
/// eigenvectors.
inline std::vector<std::pair<double, PureState>> hermitian_eigen(const DensityMatrix& m) {
  const auto sys = detail::eigen_hermitian(m.matrix(), kStructuralTol);
  std::vector<std::pair<double, PureState>> out;
  out.reserve(sys.values.size());
  for (std::size_t k = 0; k < sys.values.size(); ++k) {
    out.emplace_back(sys.values[k], PureState::normalized(sys.vectors[k]));
  }
  return out;
}

/// (c_max, c_min): the largest and smallest squared overlap between vectors
/// of two bases. For qubits c_max + c_min = 1.
inline std::pair<double, double> basis_pair_geometry(const OrthonormalBasis& x, const OrthonormalBasis& z) {
  if (x.dim() != z.dim()) throw std::invalid_argument("basis_pair_geometry: dimension mismatch");
  double cmax = 0.0;
  double cmin = 1.0;
  for (const PureState& xv : x.vectors()) {
    for (const PureState& zv : z.vectors()) {
      const double c = overlap(xv, zv);
      cmax = std::max(cmax, c);
      cmin = std::min(cmin, c);
    }
  }
  return {cmax, cmin};
}

}  // namespace qcoh
