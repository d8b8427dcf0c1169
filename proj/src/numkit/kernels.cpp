#include "scatterlab/numkit/kernels.hpp"

#include <algorithm>
#include <cstring>

#if defined(_OPENMP)
#include <omp.h>
#endif

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define SCATTERLAB_GEMM_AVX2 1
#endif

namespace scatterlab::numkit {

namespace {

void check_gemm_shapes(const ComplexMatrix& C, const ComplexMatrix& A, Op op_a,
                       const ComplexMatrix& B, Op op_b) {
  const std::size_t am = (op_a == Op::none) ? A.rows() : A.cols();
  const std::size_t ak = (op_a == Op::none) ? A.cols() : A.rows();
  const std::size_t bk = (op_b == Op::none) ? B.rows() : B.cols();
  const std::size_t bn = (op_b == Op::none) ? B.cols() : B.rows();
  if (op_a == Op::conj_trans && op_b == Op::conj_trans)
    throw DimensionError("gemm_acc: (conj_trans, conj_trans) is not supported");
  if (ak != bk || C.rows() != am || C.cols() != bn)
    throw DimensionError("gemm_acc: operand shapes do not conform");
}

// ------------------------- tiled GEMM -------------------------
//
// GotoBLAS-style structure: pack a KC x NC panel of op(B) and an MC x KC block
// of op(A) into contiguous split re/im buffers, then sweep an MR x NR
// register-tile micro-kernel. The k-block loop is sequential so every C entry
// accumulates in a fixed order regardless of thread count.

constexpr std::size_t MR = 2;
constexpr std::size_t NR = 8;
constexpr std::size_t MC = 64;
constexpr std::size_t KC = 256;
constexpr std::size_t NC = 2048;

#if SCATTERLAB_GEMM_AVX2
void ukernel(std::size_t kc, const double* __restrict apr, const double* __restrict api,
             const double* __restrict bpr, const double* __restrict bpi, double* cr0, double* ci0,
             double* cr1, double* ci1) {
  __m256d r0a = _mm256_setzero_pd(), r0b = _mm256_setzero_pd();
  __m256d i0a = _mm256_setzero_pd(), i0b = _mm256_setzero_pd();
  __m256d r1a = _mm256_setzero_pd(), r1b = _mm256_setzero_pd();
  __m256d i1a = _mm256_setzero_pd(), i1b = _mm256_setzero_pd();
  for (std::size_t k = 0; k < kc; ++k) {
    const __m256d bra = _mm256_loadu_pd(&bpr[k * NR]);
    const __m256d brb = _mm256_loadu_pd(&bpr[k * NR + 4]);
    const __m256d bia = _mm256_loadu_pd(&bpi[k * NR]);
    const __m256d bib = _mm256_loadu_pd(&bpi[k * NR + 4]);
    __m256d ar = _mm256_broadcast_sd(&apr[2 * k]);
    __m256d ai = _mm256_broadcast_sd(&api[2 * k]);
    r0a = _mm256_fmadd_pd(ar, bra, r0a);
    r0a = _mm256_fnmadd_pd(ai, bia, r0a);
    r0b = _mm256_fmadd_pd(ar, brb, r0b);
    r0b = _mm256_fnmadd_pd(ai, bib, r0b);
    i0a = _mm256_fmadd_pd(ar, bia, i0a);
    i0a = _mm256_fmadd_pd(ai, bra, i0a);
    i0b = _mm256_fmadd_pd(ar, bib, i0b);
    i0b = _mm256_fmadd_pd(ai, brb, i0b);
    ar = _mm256_broadcast_sd(&apr[2 * k + 1]);
    ai = _mm256_broadcast_sd(&api[2 * k + 1]);
    r1a = _mm256_fmadd_pd(ar, bra, r1a);
    r1a = _mm256_fnmadd_pd(ai, bia, r1a);
    r1b = _mm256_fmadd_pd(ar, brb, r1b);
    r1b = _mm256_fnmadd_pd(ai, bib, r1b);
    i1a = _mm256_fmadd_pd(ar, bia, i1a);
    i1a = _mm256_fmadd_pd(ai, bra, i1a);
    i1b = _mm256_fmadd_pd(ar, bib, i1b);
    i1b = _mm256_fmadd_pd(ai, brb, i1b);
  }
  _mm256_storeu_pd(cr0, _mm256_add_pd(_mm256_loadu_pd(cr0), r0a));
  _mm256_storeu_pd(cr0 + 4, _mm256_add_pd(_mm256_loadu_pd(cr0 + 4), r0b));
  _mm256_storeu_pd(ci0, _mm256_add_pd(_mm256_loadu_pd(ci0), i0a));
  _mm256_storeu_pd(ci0 + 4, _mm256_add_pd(_mm256_loadu_pd(ci0 + 4), i0b));
  _mm256_storeu_pd(cr1, _mm256_add_pd(_mm256_loadu_pd(cr1), r1a));
  _mm256_storeu_pd(cr1 + 4, _mm256_add_pd(_mm256_loadu_pd(cr1 + 4), r1b));
  _mm256_storeu_pd(ci1, _mm256_add_pd(_mm256_loadu_pd(ci1), i1a));
  _mm256_storeu_pd(ci1 + 4, _mm256_add_pd(_mm256_loadu_pd(ci1 + 4), i1b));
}
#else
void ukernel(std::size_t kc, const double* __restrict apr, const double* __restrict api,
             const double* __restrict bpr, const double* __restrict bpi, double* cr0, double* ci0,
             double* cr1, double* ci1) {
  double acc_r0[NR] = {0}, acc_i0[NR] = {0}, acc_r1[NR] = {0}, acc_i1[NR] = {0};
  for (std::size_t k = 0; k < kc; ++k) {
    const double ar0 = apr[2 * k], ar1 = apr[2 * k + 1];
    const double ai0 = api[2 * k], ai1 = api[2 * k + 1];
    const double* __restrict br = &bpr[k * NR];
    const double* __restrict bi = &bpi[k * NR];
    for (std::size_t j = 0; j < NR; ++j) {
      const double brj = br[j], bij = bi[j];
      acc_r0[j] += ar0 * brj - ai0 * bij;
      acc_i0[j] += ar0 * bij + ai0 * brj;
      acc_r1[j] += ar1 * brj - ai1 * bij;
      acc_i1[j] += ar1 * bij + ai1 * brj;
    }
  }
  for (std::size_t j = 0; j < NR; ++j) {
    cr0[j] += acc_r0[j];
    ci0[j] += acc_i0[j];
    cr1[j] += acc_r1[j];
    ci1[j] += acc_i1[j];
  }
}
#endif

// Packs op(B)[k0:k0+kc, j0:j0+nc] into NR-wide column tiles, zero-padded.
void pack_b(const ComplexMatrix& B, Op op, std::size_t k0, std::size_t kc, std::size_t j0,
            std::size_t nc, double* pr, double* pi) {
  for (std::size_t jt = 0; jt < nc; jt += NR) {
    const std::size_t nr = std::min(NR, nc - jt);
    double* dr = pr + jt * kc;
    double* di = pi + jt * kc;
    if (op == Op::none) {
      for (std::size_t k = 0; k < kc; ++k) {
        const double* br = B.re_row(k0 + k) + j0 + jt;
        const double* bi = B.im_row(k0 + k) + j0 + jt;
        for (std::size_t j = 0; j < nr; ++j) {
          dr[k * NR + j] = br[j];
          di[k * NR + j] = bi[j];
        }
        for (std::size_t j = nr; j < NR; ++j) {
          dr[k * NR + j] = 0.0;
          di[k * NR + j] = 0.0;
        }
      }
    } else {
      // op(B)(k, j) = conj(B(j, k)); source column j0+jt+j, row k0+k.
      for (std::size_t j = 0; j < nr; ++j) {
        const double* br = B.re_row(j0 + jt + j) + k0;
        const double* bi = B.im_row(j0 + jt + j) + k0;
        for (std::size_t k = 0; k < kc; ++k) {
          dr[k * NR + j] = br[k];
          di[k * NR + j] = -bi[k];
        }
      }
      for (std::size_t j = nr; j < NR; ++j)
        for (std::size_t k = 0; k < kc; ++k) {
          dr[k * NR + j] = 0.0;
          di[k * NR + j] = 0.0;
        }
    }
  }
}

// Packs op(A)[i0:i0+mc, k0:k0+kc] into MR-row interleaved tiles, zero-padded.
void pack_a(const ComplexMatrix& A, Op op, std::size_t i0, std::size_t mc, std::size_t k0,
            std::size_t kc, double* pr, double* pi) {
  for (std::size_t it = 0; it < mc; it += MR) {
    const std::size_t mr = std::min(MR, mc - it);
    double* dr = pr + it * kc;
    double* di = pi + it * kc;
    for (std::size_t r = 0; r < MR; ++r) {
      if (r < mr) {
        if (op == Op::none) {
          const double* ar = A.re_row(i0 + it + r) + k0;
          const double* ai = A.im_row(i0 + it + r) + k0;
          for (std::size_t k = 0; k < kc; ++k) {
            dr[2 * k + r] = ar[k];
            di[2 * k + r] = ai[k];
          }
        } else {
          // op(A)(i, k) = conj(A(k, i)); walk source column i0+it+r.
          const std::size_t col = i0 + it + r;
          for (std::size_t k = 0; k < kc; ++k) {
            dr[2 * k + r] = A.re_row(k0 + k)[col];
            di[2 * k + r] = -A.im_row(k0 + k)[col];
          }
        }
      } else {
        for (std::size_t k = 0; k < kc; ++k) {
          dr[2 * k + r] = 0.0;
          di[2 * k + r] = 0.0;
        }
      }
    }
  }
}

}  // namespace

void gemm_acc(ComplexMatrix& C, const ComplexMatrix& A, Op op_a, const ComplexMatrix& B, Op op_b) {
  check_gemm_shapes(C, A, op_a, B, op_b);
  const std::size_t m = C.rows(), n = C.cols();
  const std::size_t kk = (op_a == Op::none) ? A.cols() : A.rows();
  if (m == 0 || n == 0 || kk == 0) return;

  std::vector<double> bpr(KC * NC), bpi(KC * NC);
  std::vector<double> apr(MC * KC), api(MC * KC);
  std::vector<double> edge(4 * NR);

  for (std::size_t j0 = 0; j0 < n; j0 += NC) {
    const std::size_t nc = std::min(NC, n - j0);
    for (std::size_t k0 = 0; k0 < kk; k0 += KC) {
      const std::size_t kc = std::min(KC, kk - k0);
      pack_b(B, op_b, k0, kc, j0, nc, bpr.data(), bpi.data());
      for (std::size_t i0 = 0; i0 < m; i0 += MC) {
        const std::size_t mc = std::min(MC, m - i0);
        pack_a(A, op_a, i0, mc, k0, kc, apr.data(), api.data());
        const std::size_t n_jt = (nc + NR - 1) / NR;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
        for (std::size_t jti = 0; jti < n_jt; ++jti) {
          const std::size_t jt = jti * NR;
          const std::size_t nr = std::min(NR, nc - jt);
          double edge_buf[4 * NR];
          for (std::size_t it = 0; it < mc; it += MR) {
            const std::size_t mr = std::min(MR, mc - it);
            double* cr0 = C.re_row(i0 + it) + j0 + jt;
            double* ci0 = C.im_row(i0 + it) + j0 + jt;
            double* cr1 = (mr > 1) ? C.re_row(i0 + it + 1) + j0 + jt : edge_buf + 2 * NR;
            double* ci1 = (mr > 1) ? C.im_row(i0 + it + 1) + j0 + jt : edge_buf + 3 * NR;
            if (nr == NR && mr == MR) {
              ukernel(kc, &apr[it * kc], &api[it * kc], &bpr[jt * kc], &bpi[jt * kc], cr0, ci0, cr1,
                      ci1);
            } else {
              std::memset(edge_buf, 0, sizeof edge_buf);
              ukernel(kc, &apr[it * kc], &api[it * kc], &bpr[jt * kc], &bpi[jt * kc], edge_buf,
                      edge_buf + NR, edge_buf + 2 * NR, edge_buf + 3 * NR);
              for (std::size_t j = 0; j < nr; ++j) {
                cr0[j] += edge_buf[j];
                ci0[j] += edge_buf[NR + j];
                if (mr > 1) {
                  cr1[j] += edge_buf[2 * NR + j];
                  ci1[j] += edge_buf[3 * NR + j];
                }
              }
            }
          }
        }
      }
    }
  }
  (void)edge;
}

void matvec(const ComplexMatrix& A, Op op, const cdouble* x, cdouble* y) {
  const std::size_t m = A.rows(), n = A.cols();
  if (op == Op::none) {
    // Split x once; each output row is an independent pair of real dot products.
    std::vector<double> xr(n), xi(n);
    for (std::size_t j = 0; j < n; ++j) {
      xr[j] = x[j].real();
      xi[j] = x[j].imag();
    }
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t i = 0; i < m; ++i) {
      const double* __restrict ar = A.re_row(i);
      const double* __restrict ai = A.im_row(i);
      const double* __restrict pxr = xr.data();
      const double* __restrict pxi = xi.data();
      double sr = 0.0, si = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        sr += ar[j] * pxr[j] - ai[j] * pxi[j];
        si += ar[j] * pxi[j] + ai[j] * pxr[j];
      }
      y[i] = {sr, si};
    }
  } else {
    // y = A^H x: accumulate row-by-row into column-owned output slices.
    std::vector<double> yr(n, 0.0), yi(n, 0.0);
#if defined(_OPENMP)
#pragma omp parallel
#endif
    {
#if defined(_OPENMP)
      const int nt = omp_get_num_threads();
      const int tid = omp_get_thread_num();
#else
      const int nt = 1;
      const int tid = 0;
#endif
      const std::size_t chunk = (n + nt - 1) / nt;
      const std::size_t jlo = std::min(n, chunk * static_cast<std::size_t>(tid));
      const std::size_t jhi = std::min(n, jlo + chunk);
      if (jlo < jhi) {
        for (std::size_t i = 0; i < m; ++i) {
          const double* __restrict ar = A.re_row(i);
          const double* __restrict ai = A.im_row(i);
          const double xrv = x[i].real(), xiv = x[i].imag();
          double* __restrict pyr = yr.data();
          double* __restrict pyi = yi.data();
          for (std::size_t j = jlo; j < jhi; ++j) {
            // conj(A(i,j)) * x_i
            pyr[j] += ar[j] * xrv + ai[j] * xiv;
            pyi[j] += ar[j] * xiv - ai[j] * xrv;
          }
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) y[j] = {yr[j], yi[j]};
  }
}

cvector matvec(const ComplexMatrix& A, Op op, const cvector& x) {
  const std::size_t need = (op == Op::none) ? A.cols() : A.rows();
  if (x.size() != need) throw DimensionError("matvec: vector length does not match");
  cvector y((op == Op::none) ? A.rows() : A.cols());
  matvec(A, op, x.data(), y.data());
  return y;
}

namespace reference {

void matvec(const ComplexMatrix& A, Op op, const cdouble* x, cdouble* y) {
  const std::size_t m = A.rows(), n = A.cols();
  if (op == Op::none) {
    for (std::size_t i = 0; i < m; ++i) {
      cdouble s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += A(i, j) * x[j];
      y[i] = s;
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      cdouble s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += std::conj(A(i, j)) * x[i];
      y[j] = s;
    }
  }
}

void gemm_acc(ComplexMatrix& C, const ComplexMatrix& A, Op op_a, const ComplexMatrix& B, Op op_b) {
  check_gemm_shapes(C, A, op_a, B, op_b);
  const std::size_t m = C.rows(), n = C.cols();
  const std::size_t kk = (op_a == Op::none) ? A.cols() : A.rows();
  auto a = [&](std::size_t i, std::size_t k) {
    return (op_a == Op::none) ? A(i, k) : std::conj(A(k, i));
  };
  auto b = [&](std::size_t k, std::size_t j) {
    return (op_b == Op::none) ? B(k, j) : std::conj(B(j, k));
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cdouble s = 0.0;
      for (std::size_t k = 0; k < kk; ++k) s += a(i, k) * b(k, j);
      C.add(i, j, s);
    }
}

}  // namespace reference

}  // namespace scatterlab::numkit
