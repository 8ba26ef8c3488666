#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcoh {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major, for small dimensions. This is
/// deliberately minimal: just what density matrices, projectors and basis
/// changes need.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(int dim) : dim_(check_dim(dim)), entries_(static_cast<std::size_t>(dim) * dim) {}

  ComplexMatrix(int dim, std::vector<Complex> entries) : dim_(check_dim(dim)), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(dim_) * dim_) {
      throw std::invalid_argument("ComplexMatrix: entry count does not match dimension");
    }
    for (const Complex& e : entries_) {
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
        throw std::invalid_argument("ComplexMatrix: non-finite entry");
      }
    }
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const {
    require_same_dim(rhs);
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i) {
      for (int k = 0; k < dim_; ++k) {
        const Complex a = (*this)(i, k);
        if (a == 0.0) continue;
        for (int j = 0; j < dim_; ++j) out(i, j) += a * rhs(k, j);
      }
    }
    return out;
  }

  ComplexMatrix operator+(const ComplexMatrix& rhs) const {
    require_same_dim(rhs);
    ComplexMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += rhs.entries_[k];
    return out;
  }

  ComplexMatrix operator-(const ComplexMatrix& rhs) const {
    require_same_dim(rhs);
    ComplexMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= rhs.entries_[k];
    return out;
  }

  ComplexMatrix operator*(Complex scale) const {
    ComplexMatrix out = *this;
    for (Complex& e : out.entries_) e *= scale;
    return out;
  }

  /// Largest entry magnitude of (this - rhs); the max-norm used by the
  /// reconstruction and hermiticity tolerances.
  double max_abs_diff(const ComplexMatrix& rhs) const {
    require_same_dim(rhs);
    double worst = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      worst = std::max(worst, std::abs(entries_[k] - rhs.entries_[k]));
    }
    return worst;
  }

  double max_abs() const {
    double worst = 0.0;
    for (const Complex& e : entries_) worst = std::max(worst, std::abs(e));
    return worst;
  }

  double hermiticity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
  }

 private:
  static int check_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    return dim;
  }

  void require_same_dim(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  }

  int dim_ = 0;
  std::vector<Complex> entries_;
};

namespace detail {

struct EigenSystem {
  std::vector<double> values;                 // descending
  std::vector<std::vector<Complex>> vectors;  // vectors[k] belongs to values[k]
};

/// Closed-form spectral decomposition of a 2x2 Hermitian matrix.
inline EigenSystem eigen_hermitian_2x2(const ComplexMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex b = m(0, 1);
  const double mean = 0.5 * (a + d);
  const double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  const double hi = mean + radius;
  const double lo = mean - radius;

  EigenSystem sys;
  sys.values = {hi, lo};
  if (std::abs(b) < 1e-300 * std::max(1.0, std::abs(a) + std::abs(d))) {
    if (a >= d) {
      sys.vectors = {{1.0, 0.0}, {0.0, 1.0}};
    } else {
      sys.vectors = {{0.0, 1.0}, {1.0, 0.0}};
    }
    return sys;
  }
  // (b, hi - a) is an eigenvector for hi; the second one is its orthogonal
  // complement, which keeps the pair exactly orthonormal.
  std::vector<Complex> v0 = {b, Complex(hi - a, 0.0)};
  const double n0 = std::sqrt(std::norm(v0[0]) + std::norm(v0[1]));
  v0[0] /= n0;
  v0[1] /= n0;
  std::vector<Complex> v1 = {-std::conj(v0[1]), std::conj(v0[0])};
  sys.vectors = {std::move(v0), std::move(v1)};
  return sys;
}

/// Cyclic Jacobi diagonalization for Hermitian matrices of any small
/// dimension. Each (p,q) pass first strips the phase of A_pq, then applies
/// the classic real rotation; accumulated columns of V are the
/// eigenvectors. Deterministic sweep order, no pivoting.
inline EigenSystem eigen_hermitian_jacobi(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, a.max_abs());
  const double tol = 1e-15 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= tol) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= tol * 1e-2) continue;

        const Complex phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        double t;
        if (tau >= 0.0) {
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        } else {
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // G is identity outside rows/cols (p,q); its 2x2 block is
        //   [ c            s          ]
        //   [ -s*conj(ph)  c*conj(ph) ]
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        // A <- G^dagger A G, columns then rows.
        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + gqp * akq;
          a(k, q) = s * akp + gqq * akq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(gqp) * aqk;
          a(q, k) = s * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp + gqp * vkq;
          v(k, q) = s * vkp + gqq * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem sys;
  sys.values.reserve(static_cast<std::size_t>(n));
  sys.vectors.reserve(static_cast<std::size_t>(n));
  for (int idx : order) {
    sys.values.push_back(a(idx, idx).real());
    std::vector<Complex> col(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) col[static_cast<std::size_t>(k)] = v(k, idx);
    sys.vectors.push_back(std::move(col));
  }
  return sys;
}

/// Spectral decomposition of a Hermitian matrix, eigenvalues descending.
/// Throws if the input is not Hermitian within tolerance.
inline EigenSystem eigen_hermitian(const ComplexMatrix& m, double herm_tol = 1e-10) {
  if (m.hermiticity_defect() > herm_tol * std::max(1.0, m.max_abs())) {
    throw std::invalid_argument("eigen_hermitian: matrix is not Hermitian within tolerance");
  }
  if (m.dim() == 1) {
    EigenSystem sys;
    sys.values = {m(0, 0).real()};
    sys.vectors = {{Complex(1.0, 0.0)}};
    return sys;
  }
  if (m.dim() == 2) return eigen_hermitian_2x2(m);
  return eigen_hermitian_jacobi(m);
}

}  // namespace detail
}  // namespace qcoh
