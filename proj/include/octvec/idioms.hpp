#pragma once

#include <functional>

#include "octvec/array.hpp"
#include "octvec/scans.hpp"

namespace octvec {

struct PcaResult {
  NumArray projected;    ///< Y = P' * Xc, d x n
  NumArray components;   ///< P, eigenvectors of S as columns, ascending variance
  NumArray covariance;   ///< S = Xc * Xc' / (n - 1)
};

/// Principal components of `x` with one sample per column (d x n).
PcaResult pca(const NumArray& x);

/// Sample covariance of the rows of `x` (d x n, samples as columns).
NumArray covarianceOfRows(const NumArray& x);

enum class DistanceStrategy {
  Loop3,          ///< two loops over pairs, one over coordinates; fills by symmetry
  RowBroadcast,   ///< one loop; each step broadcasts a point against the rest
  FullBroadcast,  ///< single expression over an N x d x N difference volume
};

/// N x N Euclidean distances between the rows of `points` (N x d).
NumArray distanceMatrix(const NumArray& points, DistanceStrategy strategy);

/// Entry (i, j) is the distance from row i of X (n x d) to row j of Y (k x d).
using MetricFn = std::function<NumArray(const NumArray& x, const NumArray& y)>;

/// sqrt(sum((X - permute(Y, [3 2 1])).^2, 2)) folded back to n x k.
MetricFn metricEuclidean();
/// sum(abs(X - permute(Y, [3 2 1])), 2) folded back to n x k.
MetricFn metricManhattan();

struct NeighborResult {
  NumArray index;     ///< n x 1, 1-based row of Y closest to each row of X
  NumArray distance;  ///< n x 1
};

/// `min(metric(X, Y), [], 2)`: nearest row of Y for every row of X, ties to
/// the lowest index.
NeighborResult nearestNeighbor(const NumArray& x, const NumArray& y, const MetricFn& metric);

/// (x < 0) .* 0 + (x >= 0) .* x
NumArray replaceNegative(const NumArray& x);
/// ifelse(isnan(x) | x < 0, 0, x)
NumArray replaceNegNan(const NumArray& x);

/// BT.601 luma weights without gamma handling.
inline constexpr double kLumaRed = 0.299;
inline constexpr double kLumaGreen = 0.587;
inline constexpr double kLumaBlue = 0.114;

/// h x w x 3 to h x w. Vectorized form multiplies by the weights permuted
/// to 1x1x3 and sums along the third dimension.
NumArray rgb2gray(const NumArray& image, Variant variant = Variant::Vectorized);

using BlockFn = std::function<NumArray(const NumArray&)>;

/// Zero-pads `a` to multiples of the block size, applies `f` to every
/// non-overlapping block and reassembles; `f` must keep the block shape.
NumArray blockproc(const NumArray& a, Index blockRows, Index blockCols, const BlockFn& f);

/// T * X * T' with T = dctmtx(n) for a square n x n block.
NumArray dct2d(const NumArray& x);
/// T' * Y * T.
NumArray idct2d(const NumArray& y);

/// `@(x) T * x * T'` with T fixed to order n, as a function value.
BlockFn dct2dHandle(Index n);
BlockFn idct2dHandle(Index n);

}  // namespace octvec
