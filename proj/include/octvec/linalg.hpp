#pragma once

#include <vector>

#include "octvec/array.hpp"

namespace octvec {

/// Matrix product; each entry accumulates over k in ascending order.
NumArray matmul(const NumArray& a, const NumArray& b);

/// a' * b for two vectors of equal length, summed in ascending order.
double dot(const NumArray& a, const NumArray& b);

/// `A \ b` for square A by LU with partial pivoting. `b` may hold several
/// right-hand sides as columns.
NumArray mldivide(const NumArray& a, const NumArray& b);

/// Max absolute row sum.
double normInf(const NumArray& a);

struct EigResult {
  /// Orthonormal eigenvectors as columns, each with its largest-magnitude
  /// component positive.
  NumArray vectors;
  /// Eigenvalues as a column, ascending.
  NumArray values;
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations. Sweeps until
/// every off-diagonal magnitude is at most 1e-12 * ||S||inf, 100 sweeps max.
EigResult eigSym(const NumArray& s);

/// Orthonormal DCT-II matrix of order n: row 1 is 1/sqrt(n), row i is
/// sqrt(2/n) * cos(pi * (2j - 1) * (i - 1) / (2n)).
NumArray dctmtx(Index n);

struct DiagBand {
  /// min(m, n) x (m + n - 1); column k holds diagonal offsets[k], zero-padded.
  NumArray bands;
  /// -(m - 1) ... (n - 1), offset d meaning entries A(i, i + d).
  std::vector<Index> offsets;
};

/// Every diagonal of A as a column of the band matrix, bottom-left diagonal
/// first. For m <= n, A(i, i + d) sits in band row i; for m > n it sits in
/// band row i + d (its column), so each diagonal fits in min(m, n) rows.
DiagBand spdiagsExtract(const NumArray& a);

}  // namespace octvec
