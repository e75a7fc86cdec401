#include "octvec/reduce.hpp"

#include <cmath>

#include "octvec/core.hpp"
#include "slices.hpp"

namespace octvec {

using detail::SliceLayout;
using detail::sliceLayout;

NumArray reduceAlongDim(Reduction kind, const NumArray& a, Index dim) {
  const SliceLayout l = sliceLayout(a.shape(), dim);
  NumArray out(a.shape().withDim(dim - 1, 1));
  SliceLayout lo = l;
  lo.ext = 1;
  for (Index s = 0; s < l.above; ++s) {
    for (Index b = 0; b < l.below; ++b) {
      double acc = kind == Reduction::Prod ? 1.0 : 0.0;
      for (Index i = 0; i < l.ext; ++i) {
        const double v = a[l.at(b, i, s)];
        acc = kind == Reduction::Prod ? acc * v : acc + v;
      }
      if (kind == Reduction::Mean) acc /= static_cast<double>(l.ext);
      out[lo.at(b, 0, s)] = acc;
    }
  }
  return out;
}

NumArray sum(const NumArray& a) { return sum(a, firstNonSingleton(a.shape())); }
NumArray mean(const NumArray& a) { return mean(a, firstNonSingleton(a.shape())); }

double sumAll(const NumArray& a) {
  double acc = 0.0;
  for (double v : a.values()) acc += v;
  return acc;
}

NumArray cumsumAlongDim(const NumArray& a, Index dim) {
  const SliceLayout l = sliceLayout(a.shape(), dim);
  NumArray out(a.shape());
  for (Index s = 0; s < l.above; ++s) {
    for (Index b = 0; b < l.below; ++b) {
      double acc = 0.0;
      for (Index i = 0; i < l.ext; ++i) {
        acc += a[l.at(b, i, s)];
        out[l.at(b, i, s)] = acc;
      }
    }
  }
  return out;
}

Extremum extremum(ExtremumKind kind, const NumArray& a, Index dim) {
  const SliceLayout l = sliceLayout(a.shape(), dim);
  if (l.ext < 1) throw ShapeError("min/max: dimension " + std::to_string(dim) + " is empty");
  Extremum r{NumArray(a.shape().withDim(dim - 1, 1)), NumArray(a.shape().withDim(dim - 1, 1))};
  SliceLayout lo = l;
  lo.ext = 1;
  const auto better = [kind](double candidate, double best) {
    return kind == ExtremumKind::Min ? candidate < best : candidate > best;
  };
  for (Index s = 0; s < l.above; ++s) {
    for (Index b = 0; b < l.below; ++b) {
      double best = NAN;
      Index at = 0;
      for (Index i = 0; i < l.ext; ++i) {
        const double v = a[l.at(b, i, s)];
        if (std::isnan(v)) continue;
        if (std::isnan(best) || better(v, best)) {
          best = v;
          at = i;
        }
      }
      r.values[lo.at(b, 0, s)] = best;
      r.indices[lo.at(b, 0, s)] = static_cast<double>(at + 1);
    }
  }
  return r;
}

}  // namespace octvec
