#pragma once

#include "scatterlab/numkit/types.hpp"

namespace scatterlab::numkit {

// Operand orientation for the dense kernels.
enum class Op { none, conj_trans };

// Strided read-only view of a sub-block of a split-storage matrix.
struct ConstView {
  const double* re = nullptr;
  const double* im = nullptr;
  std::size_t rows = 0, cols = 0;
  std::size_t ld = 0;  // leading dimension (row stride) of the parent storage
};

struct MutView {
  double* re = nullptr;
  double* im = nullptr;
  std::size_t rows = 0, cols = 0;
  std::size_t ld = 0;
};

ConstView view_of(const ComplexMatrix& m, std::size_t i0, std::size_t j0, std::size_t rows,
                  std::size_t cols);
MutView view_of(ComplexMatrix& m, std::size_t i0, std::size_t j0, std::size_t rows,
                std::size_t cols);

// C += alpha * op(A) * op(B) on views (alpha real, typically +1/-1). Supported
// combinations: (none, none), (conj_trans, none), (none, conj_trans).
// Tiled and packed, OpenMP-parallel over output tiles with a fixed
// accumulation order, so results are bitwise reproducible for any thread
// count. Uses an AVX2+FMA micro-kernel when compiled for such a target.
void gemm_acc(MutView C, ConstView A, Op op_a, ConstView B, Op op_b, double alpha = 1.0);
void gemm_acc(ComplexMatrix& C, const ComplexMatrix& A, Op op_a, const ComplexMatrix& B, Op op_b,
              double alpha = 1.0);

// y = op(A) * x. Output length = rows of op(A).
void matvec(const ComplexMatrix& A, Op op, const cdouble* x, cdouble* y);
cvector matvec(const ComplexMatrix& A, Op op, const cvector& x);

// Plain serial reference implementations of the same contracts. Kept for
// correctness testing of the tiled/parallel kernels and for the benchmark
// target; no blocking, no SIMD intrinsics, no OpenMP.
namespace reference {
void matvec(const ComplexMatrix& A, Op op, const cdouble* x, cdouble* y);
void gemm_acc(ComplexMatrix& C, const ComplexMatrix& A, Op op_a, const ComplexMatrix& B, Op op_b,
              double alpha = 1.0);
}  // namespace reference

}  // namespace scatterlab::numkit
