#pragma once

#include "octvec/errors.hpp"
#include "octvec/shape.hpp"

namespace octvec::detail {

// Slabs of `below` contiguous elements, `ext` of them per slice, `above`
// slices: element (b, i, s) sits at b + below * (i + ext * s).
struct SliceLayout {
  Index below = 1;
  Index ext = 1;
  Index above = 1;
  Index at(Index b, Index i, Index s) const { return b + below * (i + ext * s); }
};

inline SliceLayout sliceLayout(const Shape& shape, Index dim) {
  if (dim < 1) throw ArgumentError("dimension must be a positive integer, got " + std::to_string(dim));
  const Index d = dim - 1;
  SliceLayout l;
  for (Index t = 0; t < d; ++t) l.below *= shape.dim(t);
  l.ext = shape.dim(d);
  for (Index t = d + 1; t < shape.rank(); ++t) l.above *= shape.dim(t);
  return l;
}

}  // namespace octvec::detail
