#include "octvec/idioms.hpp"

#include <cmath>
#include <memory>

#include "octvec/core.hpp"
#include "octvec/elementwise.hpp"
#include "octvec/indexing.hpp"
#include "octvec/linalg.hpp"
#include "octvec/reduce.hpp"

namespace octvec {

NumArray covarianceOfRows(const NumArray& x) {
  const Index n = x.cols();
  if (n < 2) throw ArgumentError("covariance needs at least 2 samples, got " + std::to_string(n));
  const NumArray centered = x - mean(x, 2);
  return matmul(centered, transpose(centered)) / static_cast<double>(n - 1);
}

PcaResult pca(const NumArray& x) {
  if (x.rank() != 2) throw ShapeError("pca: expected a d x n matrix, got " + x.shape().str());
  const Index n = x.cols();
  if (n < 2) throw ArgumentError("pca: need at least 2 samples (columns), got " + std::to_string(n));
  const NumArray centered = x - mean(x, 2);
  NumArray s = matmul(centered, transpose(centered)) / static_cast<double>(n - 1);
  NumArray p = eigSym(s).vectors;
  NumArray y = matmul(transpose(p), centered);
  return {std::move(y), std::move(p), std::move(s)};
}

namespace {

NumArray distancesLoop3(const NumArray& p) {
  const Index n = p.rows(), dims = p.cols();
  NumArray d(Shape{n, n}, 0.0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      double acc = 0.0;
      for (Index k = 0; k < dims; ++k) {
        const double diff = p(i, k) - p(j, k);
        acc += diff * diff;
      }
      d(i, j) = d(j, i) = std::sqrt(acc);
    }
  }
  return d;
}

NumArray distancesRowBroadcast(const NumArray& p) {
  const Index n = p.rows();
  NumArray d(Shape{n, n}, 0.0);
  for (Index i = 1; i <= n; ++i) {
    const NumArray rest = extract(p, {idx::range(i, idx::end), idx::all});
    const NumArray self = extract(p, {i, idx::all});
    const NumArray column = sqrt(sum(power(rest - self, 2.0), 2));
    d = assignIndexed(d, {idx::range(i, n), i}, column);
    d = assignIndexed(d, {i, idx::range(i, n)}, transpose(column));
  }
  return d;
}

NumArray pairwise(const NumArray& x, const NumArray& y, bool squared) {
  if (x.rank() != 2 || y.rank() != 2 || x.cols() != y.cols()) {
    throw ShapeError("metric: point sets must share their dimension (" + x.shape().str() + " vs " +
                     y.shape().str() + ")");
  }
  const NumArray diff = x - permute(y, {3, 2, 1});
  const NumArray folded = squared ? sqrt(sum(power(diff, 2.0), 2)) : sum(abs(diff), 2);
  return permute(folded, {1, 3, 2});
}

}  // namespace

NumArray distanceMatrix(const NumArray& points, DistanceStrategy strategy) {
  if (points.rank() != 2) throw ShapeError("distanceMatrix: expected N x d points, got " + points.shape().str());
  switch (strategy) {
    case DistanceStrategy::Loop3:
      return distancesLoop3(points);
    case DistanceStrategy::RowBroadcast:
      return distancesRowBroadcast(points);
    case DistanceStrategy::FullBroadcast:
      return pairwise(points, points, true);
  }
  throw ArgumentError("unknown distance strategy");
}

MetricFn metricEuclidean() {
  return [](const NumArray& x, const NumArray& y) { return pairwise(x, y, true); };
}

MetricFn metricManhattan() {
  return [](const NumArray& x, const NumArray& y) { return pairwise(x, y, false); };
}

NeighborResult nearestNeighbor(const NumArray& x, const NumArray& y, const MetricFn& metric) {
  if (y.rows() == 0) throw ArgumentError("nearestNeighbor: reference set Y is empty");
  const NumArray d = metric(x, y);
  Extremum e = minAlongDim(d, 2);
  return {std::move(e.indices), std::move(e.values)};
}

NumArray replaceNegative(const NumArray& x) {
  return toNumeric(x < 0.0) * 0.0 + toNumeric(x >= 0.0) * x;
}

NumArray replaceNegNan(const NumArray& x) {
  return merge(isnan(x) | (x < 0.0), 0.0, x);
}

NumArray rgb2gray(const NumArray& image, Variant variant) {
  if (image.rank() != 3 || image.dim(2) != 3) {
    throw ShapeError("rgb2gray: expected an h x w x 3 image, got " + image.shape().str());
  }
  const Index h = image.rows(), w = image.cols();
  if (variant == Variant::Loop) {
    NumArray gray(Shape{h, w});
    for (Index j = 0; j < w; ++j) {
      for (Index i = 0; i < h; ++i) {
        double acc = 0.0;
        acc += image(i, j, 0) * kLumaRed;
        acc += image(i, j, 1) * kLumaGreen;
        acc += image(i, j, 2) * kLumaBlue;
        gray(i, j) = acc;
      }
    }
    return gray;
  }
  const NumArray weights = permute(NumArray::row({kLumaRed, kLumaGreen, kLumaBlue}), {1, 3, 2});
  return sum(image * weights, 3);
}

NumArray blockproc(const NumArray& a, Index blockRows, Index blockCols, const BlockFn& f) {
  if (a.rank() != 2) throw ShapeError("blockproc: expected a 2-D matrix, got " + a.shape().str());
  if (blockRows < 1 || blockCols < 1) throw ArgumentError("blockproc: block size must be positive");
  const Index rows = (a.rows() + blockRows - 1) / blockRows * blockRows;
  const Index cols = (a.cols() + blockCols - 1) / blockCols * blockCols;
  NumArray padded(Shape{rows, cols}, 0.0);
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i) padded(i, j) = a(i, j);

  NumArray out(Shape{rows, cols}, 0.0);
  NumArray block(Shape{blockRows, blockCols});
  for (Index bj = 0; bj < cols; bj += blockCols) {
    for (Index bi = 0; bi < rows; bi += blockRows) {
      for (Index j = 0; j < blockCols; ++j)
        for (Index i = 0; i < blockRows; ++i) block(i, j) = padded(bi + i, bj + j);
      const NumArray result = f(block);
      if (!(result.shape() == block.shape())) {
        throw ContractError("blockproc: function returned " + result.shape().str() + " for a " +
                            block.shape().str() + " block");
      }
      for (Index j = 0; j < blockCols; ++j)
        for (Index i = 0; i < blockRows; ++i) out(bi + i, bj + j) = result(i, j);
    }
  }
  return out;
}

namespace {

void requireBlockOrder(const NumArray& x, const NumArray& t) {
  if (x.rank() != 2 || x.rows() != t.rows() || x.cols() != t.rows()) {
    throw ShapeError("dct2d: block is " + x.shape().str() + ", transform order is " + std::to_string(t.rows()));
  }
}

}  // namespace

NumArray dct2d(const NumArray& x) {
  if (x.rank() != 2 || x.rows() != x.cols()) throw ShapeError("dct2d: block must be square, got " + x.shape().str());
  return dct2dHandle(x.rows())(x);
}

NumArray idct2d(const NumArray& y) {
  if (y.rank() != 2 || y.rows() != y.cols()) throw ShapeError("idct2d: block must be square, got " + y.shape().str());
  return idct2dHandle(y.rows())(y);
}

BlockFn dct2dHandle(Index n) {
  auto t = std::make_shared<const NumArray>(dctmtx(n));
  return [t](const NumArray& x) {
    requireBlockOrder(x, *t);
    return matmul(matmul(*t, x), transpose(*t));
  };
}

BlockFn idct2dHandle(Index n) {
  auto t = std::make_shared<const NumArray>(dctmtx(n));
  return [t](const NumArray& y) {
    requireBlockOrder(y, *t);
    return matmul(matmul(transpose(*t), y), *t);
  };
}

}  // namespace octvec
