#pragma once

#include "octvec/array.hpp"

namespace octvec {

enum class Reduction { Sum, Prod, Mean };

/// Collapses 1-based `dim` to extent 1. Accumulates in ascending index
/// order with a plain running total, so a vector sum matches a scalar loop
/// bit for bit. A `dim` past the rank reduces a singleton: shape unchanged.
NumArray reduceAlongDim(Reduction kind, const NumArray& a, Index dim);

inline NumArray sum(const NumArray& a, Index dim) { return reduceAlongDim(Reduction::Sum, a, dim); }
inline NumArray prod(const NumArray& a, Index dim) { return reduceAlongDim(Reduction::Prod, a, dim); }
inline NumArray mean(const NumArray& a, Index dim) { return reduceAlongDim(Reduction::Mean, a, dim); }
/// Along the first non-singleton dimension.
NumArray sum(const NumArray& a);
NumArray mean(const NumArray& a);

/// Sum of every element, ascending linear order.
double sumAll(const NumArray& a);

NumArray cumsumAlongDim(const NumArray& a, Index dim);

enum class ExtremumKind { Min, Max };

struct Extremum {
  NumArray values;
  /// 1-based position of the first occurrence within each slice.
  NumArray indices;
};

/// `[v, i] = min(A, [], dim)` / `max`. NaN is skipped unless the whole
/// slice is NaN, which gives NaN at index 1.
Extremum extremum(ExtremumKind kind, const NumArray& a, Index dim);
inline Extremum minAlongDim(const NumArray& a, Index dim) { return extremum(ExtremumKind::Min, a, dim); }
inline Extremum maxAlongDim(const NumArray& a, Index dim) { return extremum(ExtremumKind::Max, a, dim); }

}  // namespace octvec
