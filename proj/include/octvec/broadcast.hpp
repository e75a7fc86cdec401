#pragma once

#include <array>
#include <functional>
#include <vector>

#include "octvec/array.hpp"

namespace octvec {

/// How N operands line up against a common result shape. A stride of 0
/// means the operand repeats along that dimension; nothing is copied.
struct BroadcastPlan {
  Shape resultShape;
  /// strides[operand][dim], in elements of that operand's buffer.
  std::vector<std::vector<Index>> strides;

  /// Whether operand `k` advances along 0-based dimension `d`.
  bool advances(std::size_t k, Index d) const { return strides[k][static_cast<std::size_t>(d)] != 0; }
};

/// Extents must agree or be 1 in every dimension; shorter shapes are padded
/// with trailing singletons.
BroadcastPlan broadcastShapes(std::span<const Shape> shapes);
BroadcastPlan broadcastShapes(const Shape& a, const Shape& b);

namespace detail {

/// Walks the result of `plan` in column-major order, calling
/// f(resultLinear, operandOffsets).
template <std::size_t N, typename F>
void traverse(const BroadcastPlan& plan, F&& f) {
  const Shape& shape = plan.resultShape;
  const Index total = shape.numel();
  if (total == 0) return;
  const Index k = shape.rank();
  const Index inner = shape.dim(0);
  std::array<Index, N> innerStride{};
  for (std::size_t op = 0; op < N; ++op) innerStride[op] = plan.strides[op][0];
  std::vector<Index> sub(static_cast<std::size_t>(k), 0);
  std::array<Index, N> base{};
  for (Index lin = 0; lin < total; lin += inner) {
    std::array<Index, N> off = base;
    for (Index i = 0; i < inner; ++i) {
      f(lin + i, off);
      for (std::size_t op = 0; op < N; ++op) off[op] += innerStride[op];
    }
    for (Index t = 1; t < k; ++t) {
      const auto ut = static_cast<std::size_t>(t);
      if (++sub[ut] < shape.dim(t)) {
        for (std::size_t op = 0; op < N; ++op) base[op] += plan.strides[op][ut];
        break;
      }
      for (std::size_t op = 0; op < N; ++op) base[op] -= (sub[ut] - 1) * plan.strides[op][ut];
      sub[ut] = 0;
    }
  }
}

}  // namespace detail

/// Elementwise f(a, b) under broadcasting.
template <typename R, typename A, typename B, typename F>
DenseArray<R> broadcastMap(const DenseArray<A>& a, const DenseArray<B>& b, F&& f) {
  const BroadcastPlan plan = broadcastShapes(a.shape(), b.shape());
  DenseArray<R> out(plan.resultShape);
  const A* pa = a.data().data();
  const B* pb = b.data().data();
  R* po = out.data().data();
  detail::traverse<2>(plan, [&](Index lin, const std::array<Index, 2>& off) {
    po[lin] = f(pa[off[0]], pb[off[1]]);
  });
  return out;
}

/// Elementwise f(a, b, c) under broadcasting.
template <typename R, typename A, typename B, typename C, typename F>
DenseArray<R> broadcastMap(const DenseArray<A>& a, const DenseArray<B>& b, const DenseArray<C>& c, F&& f) {
  const Shape shapes[] = {a.shape(), b.shape(), c.shape()};
  const BroadcastPlan plan = broadcastShapes(shapes);
  DenseArray<R> out(plan.resultShape);
  const A* pa = a.data().data();
  const B* pb = b.data().data();
  const C* pc = c.data().data();
  R* po = out.data().data();
  detail::traverse<3>(plan, [&](Index lin, const std::array<Index, 3>& off) {
    po[lin] = f(pa[off[0]], pb[off[1]], pc[off[2]]);
  });
  return out;
}

template <typename R, typename A, typename F>
DenseArray<R> map(const DenseArray<A>& a, F&& f) {
  DenseArray<R> out(a.shape());
  for (Index i = 0; i < a.numel(); ++i) out[i] = f(a[i]);
  return out;
}

/// A scalar binary function passed around as a value (`bsxfun`'s argument).
using BinaryFn = std::function<double(double, double)>;

/// `bsxfun(f, A, B)`: any scalar function under the broadcasting rules.
NumArray applyBroadcast(const BinaryFn& f, const NumArray& a, const NumArray& b);

}  // namespace octvec
