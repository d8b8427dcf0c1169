#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "scatterlab/errors.hpp"

namespace scatterlab {

using cdouble = std::complex<double>;
using cvector = std::vector<cdouble>;
using rvector = std::vector<double>;

namespace numkit {

// Dense complex matrix, row-major, stored as separate real/imaginary planes
// (structure-of-arrays). The split layout keeps the hot kernels (GEMM, LU
// trailing updates, matvec) on contiguous real arrays that vectorize cleanly.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), re_(rows * cols, 0.0), im_(rows * cols, 0.0) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.re_[i * n + i] = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  cdouble operator()(std::size_t i, std::size_t j) const {
    const std::size_t t = i * cols_ + j;
    return {re_[t], im_[t]};
  }
  void set(std::size_t i, std::size_t j, cdouble v) {
    const std::size_t t = i * cols_ + j;
    re_[t] = v.real();
    im_[t] = v.imag();
  }
  void add(std::size_t i, std::size_t j, cdouble v) {
    const std::size_t t = i * cols_ + j;
    re_[t] += v.real();
    im_[t] += v.imag();
  }

  double* re_row(std::size_t i) { return re_.data() + i * cols_; }
  double* im_row(std::size_t i) { return im_.data() + i * cols_; }
  const double* re_row(std::size_t i) const { return re_.data() + i * cols_; }
  const double* im_row(std::size_t i) const { return im_.data() + i * cols_; }
  std::vector<double>& re() { return re_; }
  std::vector<double>& im() { return im_; }
  const std::vector<double>& re() const { return re_; }
  const std::vector<double>& im() const { return im_; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    double* ri = re_row(i);
    double* rj = re_row(j);
    double* ii = im_row(i);
    double* ij = im_row(j);
    for (std::size_t t = 0; t < cols_; ++t) {
      std::swap(ri[t], rj[t]);
      std::swap(ii[t], ij[t]);
    }
  }

  // Conjugate transpose, materialized.
  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const std::size_t s = i * cols_ + j;
        out.re_[j * rows_ + i] = re_[s];
        out.im_[j * rows_ + i] = -im_[s];
      }
    return out;
  }

  cvector column(std::size_t j) const {
    cvector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_column(std::size_t j, const cvector& c) {
    for (std::size_t i = 0; i < rows_; ++i) set(i, j, c[i]);
  }

  bool all_finite() const {
    for (double v : re_)
      if (!std::isfinite(v)) return false;
    for (double v : im_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (std::size_t t = 0; t < re_.size(); ++t)
      m = std::max(m, std::hypot(re_[t], im_[t]));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (std::size_t t = 0; t < re_.size(); ++t) s += re_[t] * re_[t] + im_[t] * im_[t];
    return std::sqrt(s);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> re_, im_;
};

// --- small vector helpers shared by the solvers ---

inline double norm2(const cvector& x) {
  double s = 0.0;
  for (const cdouble& v : x) s += std::norm(v);
  return std::sqrt(s);
}

inline double norm2(const rvector& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

// Conjugated inner product <x, y> = sum conj(x_i) y_i.
inline cdouble dot(const cvector& x, const cvector& y) {
  cdouble s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

inline void axpy(cdouble alpha, const cvector& x, cvector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(cvector& x, cdouble alpha) {
  for (cdouble& v : x) v *= alpha;
}

inline bool all_finite(const cvector& x) {
  for (const cdouble& v : x)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

}  // namespace numkit
}  // namespace scatterlab
