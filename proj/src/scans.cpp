#include "octvec/scans.hpp"

#include "octvec/core.hpp"
#include "octvec/indexing.hpp"
#include "octvec/elementwise.hpp"
#include "octvec/linalg.hpp"

namespace octvec {

namespace {

void requireMatrix(const NumArray& m, const char* name) {
  if (m.rank() != 2) throw ShapeError(std::string(name) + ": expected a 2-D matrix, got " + m.shape().str());
}

NumArray asRow(const NumArray& v) { return reshape(v, Shape{1, v.numel()}); }

// The flattening position is (j - 1) * rows + i; indexing by the column
// count instead only works for square inputs.
ScanResult linearLoop(const NumArray& m) {
  const Index rows = m.rows();
  NumArray out(Shape{1, m.numel()});
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < rows; ++i) out[j * rows + i] = m(i, j);
  return {out};
}

ScanResult boustrophedonLoop(const NumArray& m) {
  const Index rows = m.rows();
  NumArray out(Shape{1, m.numel()});
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < rows; ++i) {
      // j is 0-based here, so "odd column" in 1-based terms is even j.
      const double v = j % 2 == 0 ? m(i, j) : m(rows - 1 - i, j);
      out[j * rows + i] = v;
    }
  }
  return {out};
}

ScanResult zigzagLoop(const NumArray& m) {
  const Index rows = m.rows(), cols = m.cols();
  NumArray out(Shape{1, m.numel()});
  if (m.isEmpty()) return {out};
  // 1-based walker, c = +1 moving down-right, -1 moving up-left.
  Index k = 0, c = 1, i = rows, j = 1;
  auto inRange = [](Index v, Index hi) { return 1 <= v && v <= hi; };
  while (inRange(i, rows) && inRange(j, cols)) {
    out[k++] = m(i - 1, j - 1);
    i += c;
    j += c;
    if (i < 1 && j < 1) {
      i += 1;
      j += 2;
      c = -c;
    } else if (i > rows && j > cols) {
      i -= 2;
      j -= 1;
      c = -c;
    } else if (i < 1) {
      i += 1;
      j += 2;
      c = -c;
    } else if (i > rows) {
      i -= 1;
      c = -c;
    } else if (j < 1) {
      j += 1;
      c = -c;
    } else if (j > cols) {
      j -= 1;
      i -= 2;
      c = -c;
    }
  }
  return {out};
}

ScanResult zigzagVectorized(const NumArray& m) {
  if (m.isEmpty()) return {NumArray(Shape{1, 0})};
  NumArray ind = reshape(colonRange(1.0, static_cast<double>(m.numel())), m.shape());
  ind = spdiagsExtract(ind).bands;
  if (ind.cols() >= 2) {
    const IndexExpr even{idx::all, idx::range(2, 2, idx::end)};
    ind = assignIndexed(ind, even, flipud(extract(ind, even)));
  }
  ind = deleteElements(ind, eq(ind, 0.0));
  return {asRow(extract(m, ind))};
}

}  // namespace

ScanResult linearScan(const NumArray& m, Variant variant) {
  requireMatrix(m, "linearScan");
  if (variant == Variant::Loop) return linearLoop(m);
  return {transpose(extract(m, IndexExpr::linear(idx::all)))};
}

ScanResult boustrophedonScan(const NumArray& m, Variant variant) {
  requireMatrix(m, "boustrophedonScan");
  if (variant == Variant::Loop) return boustrophedonLoop(m);
  NumArray flipped = m;
  if (m.cols() >= 2) {
    const IndexExpr even{idx::all, idx::range(2, 2, idx::end)};
    flipped = assignIndexed(m, even, flipud(extract(m, even)));
  }
  return {transpose(extract(flipped, IndexExpr::linear(idx::all)))};
}

ScanResult zigzagScan(const NumArray& m, Variant variant) {
  requireMatrix(m, "zigzagScan");
  return variant == Variant::Loop ? zigzagLoop(m) : zigzagVectorized(m);
}

}  // namespace octvec
