#pragma once

#include "octvec/array.hpp"
#include "octvec/rearrange.hpp"

namespace octvec {

inline NumArray zeros(Shape shape) { return NumArray(std::move(shape), 0.0); }
inline NumArray zeros(Index m, Index n) { return zeros(Shape{m, n}); }
inline NumArray ones(Shape shape) { return NumArray(std::move(shape), 1.0); }
inline NumArray ones(Index m, Index n) { return ones(Shape{m, n}); }
NumArray identity(Index n);

/// start:step:stop as a 1xk row; 1x0 when the step points away from stop.
NumArray colonRange(double start, double step, double stop);
inline NumArray colonRange(double start, double stop) { return colonRange(start, 1.0, stop); }

/// Magic square of doubly-even order (n divisible by 4).
NumArray magic(Index n);

enum class SortDirection { Ascending, Descending };

struct SortResult {
  NumArray sorted;
  /// 1-based source positions along the sorted dimension.
  NumArray permutation;
};

/// Stable sort of every slice along 1-based `dim`. NaN goes last in either
/// direction.
SortResult sortAlongDim(const NumArray& a, Index dim, SortDirection direction = SortDirection::Ascending);

/// Distinct values, ascending, always as a row.
NumArray uniqueSorted(const NumArray& a);

/// Successor minus element along 1-based `dim`.
NumArray diffAdjacent(const NumArray& a, Index dim);
/// Along the first non-singleton dimension.
NumArray diffAdjacent(const NumArray& a);

/// First dimension (1-based) whose extent is not 1; 1 when all are.
Index firstNonSingleton(const Shape& shape);

}  // namespace octvec
