#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "octvec/array.hpp"

namespace octvec {

namespace detail {

/// Copies `src` into an array of `resultShape`, where stepping result
/// dimension t advances the source by `srcStrides[t]` elements.
template <typename Scalar>
DenseArray<Scalar> gatherStrided(const DenseArray<Scalar>& src, const Shape& resultShape,
                                 const std::vector<Index>& srcStrides) {
  DenseArray<Scalar> out(resultShape);
  const Index n = out.numel();
  if (n == 0) return out;
  const Index k = static_cast<Index>(srcStrides.size());
  std::vector<Index> sub(static_cast<std::size_t>(k), 0);
  Index offset = 0;
  const Index inner = resultShape.dim(0);
  const Index innerStride = srcStrides[0];
  for (Index base = 0; base < n; base += inner) {
    for (Index i = 0; i < inner; ++i) out[base + i] = src[offset + i * innerStride];
    for (Index t = 1; t < k; ++t) {
      const auto ut = static_cast<std::size_t>(t);
      if (++sub[ut] < resultShape.dim(t)) {
        offset += srcStrides[ut];
        break;
      }
      offset -= (sub[ut] - 1) * srcStrides[ut];
      sub[ut] = 0;
    }
  }
  return out;
}

inline std::vector<Index> validatePermutation(std::span<const Index> order, Index rank) {
  const Index k = static_cast<Index>(order.size());
  if (k < rank) {
    throw ArgumentError("permute: order has " + std::to_string(k) + " entries, array rank is " +
                        std::to_string(rank));
  }
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  std::vector<Index> zeroBased(static_cast<std::size_t>(k));
  for (Index t = 0; t < k; ++t) {
    const Index d = order[static_cast<std::size_t>(t)];
    if (d < 1 || d > k || seen[static_cast<std::size_t>(d - 1)]) {
      throw ArgumentError("permute: order is not a permutation of 1.." + std::to_string(k));
    }
    seen[static_cast<std::size_t>(d - 1)] = true;
    zeroBased[static_cast<std::size_t>(t)] = d - 1;
  }
  return zeroBased;
}

}  // namespace detail

/// Same buffer under a new shape.
template <typename Scalar>
DenseArray<Scalar> reshape(const DenseArray<Scalar>& a, const Shape& shape) {
  if (shape.numel() != a.numel()) {
    throw ShapeError("reshape: can't reshape " + a.shape().str() + " array to " + shape.str() +
                     " array");
  }
  return DenseArray<Scalar>(shape, a.data());
}

/// Reorders dimensions; result dimension t is source dimension order[t]
/// (1-based). The order may name singleton dimensions beyond the rank.
template <typename Scalar>
DenseArray<Scalar> permute(const DenseArray<Scalar>& a, std::span<const Index> order) {
  const auto perm = detail::validatePermutation(order, a.rank());
  const Index k = static_cast<Index>(perm.size());
  std::vector<Index> srcStridesAll(static_cast<std::size_t>(k));
  Index stride = 1;
  for (Index d = 0; d < k; ++d) {
    srcStridesAll[static_cast<std::size_t>(d)] = stride;
    stride *= a.dim(d);
  }
  std::vector<Index> dims(static_cast<std::size_t>(std::max<Index>(k, 2)), 1);
  std::vector<Index> strides(dims.size(), 0);
  for (Index t = 0; t < k; ++t) {
    const auto src = static_cast<std::size_t>(perm[static_cast<std::size_t>(t)]);
    dims[static_cast<std::size_t>(t)] = a.dim(static_cast<Index>(src));
    strides[static_cast<std::size_t>(t)] = srcStridesAll[src];
  }
  return detail::gatherStrided(a, Shape(dims), strides);
}
template <typename Scalar>
DenseArray<Scalar> permute(const DenseArray<Scalar>& a, std::initializer_list<Index> order) {
  return permute(a, std::span<const Index>(order.begin(), order.size()));
}

/// Inverse of `permute` for the same order.
template <typename Scalar>
DenseArray<Scalar> ipermute(const DenseArray<Scalar>& a, std::span<const Index> order) {
  const auto perm = detail::validatePermutation(order, 0);
  std::vector<Index> inverse(perm.size());
  for (std::size_t t = 0; t < perm.size(); ++t) {
    inverse[static_cast<std::size_t>(perm[t])] = static_cast<Index>(t) + 1;
  }
  return permute(a, std::span<const Index>(inverse));
}
template <typename Scalar>
DenseArray<Scalar> ipermute(const DenseArray<Scalar>& a, std::initializer_list<Index> order) {
  return ipermute(a, std::span<const Index>(order.begin(), order.size()));
}

template <typename Scalar>
DenseArray<Scalar> transpose(const DenseArray<Scalar>& a) {
  if (a.rank() > 2) throw ShapeError("transpose not defined for N-D objects");
  return permute(a, {2, 1});
}

/// Row order reversed; same as indexing rows with end:-1:1.
template <typename Scalar>
DenseArray<Scalar> flipud(const DenseArray<Scalar>& a) {
  if (a.rank() > 2) throw ShapeError("flipud: only 2-D arrays are supported, got " + a.shape().str());
  DenseArray<Scalar> out(a.shape());
  const Index m = a.rows();
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < m; ++i) out(i, j) = a(m - 1 - i, j);
  return out;
}

/// Concatenation along 1-based dimension `dim`; every other extent must agree.
/// Empty 0x0 operands are skipped, as in Octave.
template <typename Scalar>
DenseArray<Scalar> cat(Index dim, const std::vector<DenseArray<Scalar>>& arrays) {
  if (dim < 1) throw ArgumentError("cat: dimension must be a positive integer");
  const Index d = dim - 1;
  std::vector<const DenseArray<Scalar>*> parts;
  for (const auto& a : arrays)
    if (!(a.shape() == Shape{0, 0})) parts.push_back(&a);
  if (parts.empty()) return DenseArray<Scalar>();
  const Shape& ref = parts.front()->shape();
  const Index k = std::max<Index>(ref.rank(), d + 1);
  Index total = 0;
  for (const auto* p : parts) {
    for (Index t = 0; t < std::max<Index>(k, p->rank()); ++t) {
      if (t != d && p->dim(t) != ref.dim(t)) {
        throw ShapeError("concatenation operator not implemented for '" + ref.str() + "' by '" +
                         p->shape().str() + "' operations along dimension " + std::to_string(dim));
      }
    }
    total += p->dim(d);
  }
  std::vector<Index> dims(static_cast<std::size_t>(std::max<Index>(k, 2)));
  for (Index t = 0; t < static_cast<Index>(dims.size()); ++t) dims[static_cast<std::size_t>(t)] = ref.dim(t);
  dims[static_cast<std::size_t>(d)] = total;
  DenseArray<Scalar> out{Shape(dims)};

  // Blocks of `below` contiguous elements per slab, `above` slabs.
  Index below = 1;
  for (Index t = 0; t < d; ++t) below *= ref.dim(t);
  const Index above = out.numel() / std::max<Index>(below * total, 1);
  Index written = 0;
  for (Index s = 0; s < above; ++s) {
    for (const auto* p : parts) {
      const Index chunk = below * p->dim(d);
      for (Index e = 0; e < chunk; ++e) out[written++] = (*p)[s * chunk + e];
    }
  }
  return out;
}
template <typename Scalar>
DenseArray<Scalar> horzcat(const std::vector<DenseArray<Scalar>>& arrays) { return cat(2, arrays); }
template <typename Scalar>
DenseArray<Scalar> vertcat(const std::vector<DenseArray<Scalar>>& arrays) { return cat(1, arrays); }

/// Tiles the whole array `reps[t]` times along dimension t.
template <typename Scalar>
DenseArray<Scalar> repmat(const DenseArray<Scalar>& a, std::span<const Index> reps) {
  for (Index r : reps)
    if (r < 1) throw ArgumentError("repmat: replication counts must be positive integers");
  const Index k = std::max<Index>(a.rank(), static_cast<Index>(reps.size()));
  std::vector<Index> dims(static_cast<std::size_t>(std::max<Index>(k, 2)));
  for (Index t = 0; t < static_cast<Index>(dims.size()); ++t) {
    const Index r = t < static_cast<Index>(reps.size()) ? reps[static_cast<std::size_t>(t)] : 1;
    dims[static_cast<std::size_t>(t)] = a.dim(t) * r;
  }
  DenseArray<Scalar> out{Shape(dims)};
  std::vector<Index> sub(dims.size(), 0);
  for (Index lin = 0; lin < out.numel(); ++lin) {
    Index src = 0, stride = 1;
    for (std::size_t t = 0; t < dims.size(); ++t) {
      const Index ext = a.dim(static_cast<Index>(t));
      src += (sub[t] % ext) * stride;
      stride *= ext;
    }
    out[lin] = a[src];
    for (std::size_t t = 0; t < dims.size(); ++t) {
      if (++sub[t] < dims[t]) break;
      sub[t] = 0;
    }
  }
  return out;
}
template <typename Scalar>
DenseArray<Scalar> repmat(const DenseArray<Scalar>& a, Index rowReps, Index colReps) {
  const Index reps[] = {rowReps, colReps};
  return repmat(a, std::span<const Index>(reps));
}

/// Each element of vector `a` repeated `counts[i]` times, in order.
template <typename Scalar>
DenseArray<Scalar> repelems(const DenseArray<Scalar>& a, std::span<const Index> counts) {
  if (!a.isVector()) throw ShapeError("repelems: input must be a vector, got " + a.shape().str());
  if (static_cast<Index>(counts.size()) != a.numel()) {
    throw ShapeError("repelems: need one count per element");
  }
  Index total = 0;
  for (Index c : counts) {
    if (c < 1) throw ArgumentError("repelems: counts must be positive integers");
    total += c;
  }
  DenseArray<Scalar> out(Shape{1, total});
  Index w = 0;
  for (Index i = 0; i < a.numel(); ++i)
    for (Index c = 0; c < counts[static_cast<std::size_t>(i)]; ++c) out[w++] = a[i];
  return out;
}

/// Circular shift by `k` positions along 1-based dimension `dim`.
template <typename Scalar>
DenseArray<Scalar> circshift(const DenseArray<Scalar>& a, Index k, Index dim) {
  if (dim < 1) throw ArgumentError("circshift: dimension must be a positive integer");
  const Index d = dim - 1;
  const Index ext = a.dim(d);
  DenseArray<Scalar> out(a.shape());
  if (a.isEmpty() || ext == 1) return a;
  const Index shift = ((k % ext) + ext) % ext;
  Index below = 1;
  for (Index t = 0; t < d; ++t) below *= a.dim(t);
  const Index above = a.numel() / (below * ext);
  for (Index s = 0; s < above; ++s)
    for (Index i = 0; i < ext; ++i)
      for (Index b = 0; b < below; ++b)
        out[b + below * ((i + shift) % ext + ext * s)] = a[b + below * (i + ext * s)];
  return out;
}

}  // namespace octvec
