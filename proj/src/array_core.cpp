#include <algorithm>
#include <cmath>
#include <numeric>

#include "octvec/core.hpp"
#include "slices.hpp"

namespace octvec {

using detail::SliceLayout;
using detail::sliceLayout;

NumArray identity(Index n) {
  NumArray out(Shape{n, n}, 0.0);
  for (Index i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

NumArray colonRange(double start, double step, double stop) {
  if (step == 0.0) throw ArgumentError("colon: increment must be nonzero");
  if (!std::isfinite(start) || !std::isfinite(step) || !std::isfinite(stop)) {
    throw ArgumentError("colon: range bounds and increment must be finite");
  }
  const double span = (stop - start) / step;
  if (span < 0.0) return NumArray(Shape{1, 0});
  // Small slack so e.g. 0:0.1:1 keeps its endpoint.
  const auto count = static_cast<Index>(std::floor(span + span * 4 * kEps)) + 1;
  NumArray out(Shape{1, count});
  for (Index i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
  return out;
}

NumArray magic(Index n) {
  if (n < 4 || n % 4 != 0) {
    throw ArgumentError("magic: only doubly-even orders (multiples of 4) are supported, got " +
                        std::to_string(n));
  }
  NumArray out(Shape{n, n});
  const double top = static_cast<double>(n) * static_cast<double>(n) + 1.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double v = static_cast<double>(i * n + j + 1);
      const Index r = i % 4, c = j % 4;
      out(i, j) = (r == c || r + c == 3) ? top - v : v;
    }
  }
  return out;
}

SortResult sortAlongDim(const NumArray& a, Index dim, SortDirection direction) {
  const SliceLayout l = sliceLayout(a.shape(), dim);
  SortResult r{NumArray(a.shape()), NumArray(a.shape())};
  std::vector<Index> order(static_cast<std::size_t>(l.ext));
  for (Index s = 0; s < l.above; ++s) {
    for (Index b = 0; b < l.below; ++b) {
      std::iota(order.begin(), order.end(), Index{0});
      auto key = [&](Index i) { return a[l.at(b, i, s)]; };
      std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
        const double vx = key(x), vy = key(y);
        if (std::isnan(vx)) return false;
        if (std::isnan(vy)) return true;
        return direction == SortDirection::Ascending ? vx < vy : vx > vy;
      });
      for (Index i = 0; i < l.ext; ++i) {
        const Index src = order[static_cast<std::size_t>(i)];
        r.sorted[l.at(b, i, s)] = key(src);
        r.permutation[l.at(b, i, s)] = static_cast<double>(src + 1);
      }
    }
  }
  return r;
}

NumArray uniqueSorted(const NumArray& a) {
  std::vector<double> v(a.values().begin(), a.values().end());
  const auto firstNan = std::partition(v.begin(), v.end(), [](double x) { return !std::isnan(x); });
  std::sort(v.begin(), firstNan);
  const auto last = std::unique(v.begin(), firstNan);
  // Every NaN is distinct from every other value, itself included.
  const auto tail = std::move(firstNan, v.end(), last);
  v.erase(tail, v.end());
  return NumArray::row(v);
}

NumArray diffAdjacent(const NumArray& a, Index dim) {
  const SliceLayout l = sliceLayout(a.shape(), dim);
  const Index outExt = std::max<Index>(l.ext - 1, 0);
  NumArray out(a.shape().withDim(dim - 1, outExt));
  SliceLayout lo = l;
  lo.ext = outExt;
  for (Index s = 0; s < l.above; ++s)
    for (Index i = 0; i < outExt; ++i)
      for (Index b = 0; b < l.below; ++b) out[lo.at(b, i, s)] = a[l.at(b, i + 1, s)] - a[l.at(b, i, s)];
  return out;
}

NumArray diffAdjacent(const NumArray& a) { return diffAdjacent(a, firstNonSingleton(a.shape())); }

Index firstNonSingleton(const Shape& shape) {
  for (Index t = 0; t < shape.rank(); ++t)
    if (shape.dim(t) != 1) return t + 1;
  return 1;
}

}  // namespace octvec
