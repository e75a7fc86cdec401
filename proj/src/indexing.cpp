#include "octvec/indexing.hpp"

#include <cmath>
#include <string>

#include "octvec/core.hpp"

namespace octvec {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string positionLabel(Index dim, Index value) {
  if (dim == 0) return "index (" + std::to_string(value) + ")";
  std::string s = "index (";
  for (Index t = 1; t < dim; ++t) s += "_,";
  s += std::to_string(value);
  s += dim == 1 ? ",_)" : ")";
  return s;
}

Index checked(Index oneBased, Index extent, Index dim) {
  if (oneBased < 1) {
    throw IndexError(positionLabel(dim, oneBased) + ": out of bound; value " + std::to_string(oneBased) +
                     " out of bound " + std::to_string(extent) + " (indices start at 1)");
  }
  if (oneBased > extent) {
    throw IndexError(positionLabel(dim, oneBased) + ": out of bound; value " + std::to_string(oneBased) +
                     " out of bound " + std::to_string(extent));
  }
  return oneBased - 1;
}

// Selection shape of a linear index expression, given how many positions it
// resolved to.
Shape linearResultShape(const Selector& s, Index count) {
  if (std::holds_alternative<idx::All>(s)) return Shape{count, 1};
  return Shape{1, count};
}

void requireDimCount(const NumArray& a, const IndexExpr& ix) {
  const Index k = static_cast<Index>(ix.selectors().size());
  if (k != a.rank()) {
    throw ArgumentError("index expression has " + std::to_string(k) + " subscripts for a " +
                        a.shape().str() + " array");
  }
}

// Calls f(dest, source) over the Cartesian product of per-dimension
// positions; dest counts the selection in column-major order.
template <typename F>
void forEachSelected(const Shape& shape, const std::vector<std::vector<Index>>& picks, F&& f) {
  const auto k = picks.size();
  Index total = 1;
  for (const auto& p : picks) total *= static_cast<Index>(p.size());
  if (total == 0) return;
  const auto strides = shape.strides();
  std::vector<std::size_t> sub(k, 0);
  for (Index dest = 0; dest < total; ++dest) {
    Index src = 0;
    for (std::size_t t = 0; t < k; ++t) src += picks[t][sub[t]] * strides[t];
    f(dest, src);
    for (std::size_t t = 0; t < k; ++t) {
      if (++sub[t] < picks[t].size()) break;
      sub[t] = 0;
    }
  }
}

std::vector<std::vector<Index>> resolveAll(const NumArray& a, const IndexExpr& ix) {
  requireDimCount(a, ix);
  std::vector<std::vector<Index>> picks;
  for (std::size_t t = 0; t < ix.selectors().size(); ++t) {
    const Index dim = static_cast<Index>(t);
    picks.push_back(resolveSelector(ix.selectors()[t], a.dim(dim), dim + 1));
  }
  return picks;
}

std::vector<Index> nonSingleton(const Shape& s) {
  std::vector<Index> out;
  for (Index d : s.dims())
    if (d != 1) out.push_back(d);
  return out;
}

void requireAssignable(const Shape& selection, const NumArray& rhs) {
  if (rhs.numel() == 1) return;
  if (nonSingleton(selection) != nonSingleton(rhs.shape())) {
    throw ShapeError("=: nonconformant arguments (op1 is " + selection.str() + ", op2 is " +
                     rhs.shape().str() + ")");
  }
}

NumArray growVector(const NumArray& a, Index newNumel) {
  Shape grown = (a.shape().cols() == 1 && a.shape().rows() != 1 && a.rank() == 2) ||
                        a.shape() == Shape{0, 1}
                    ? Shape{newNumel, 1}
                    : Shape{1, newNumel};
  NumArray out(grown, 0.0);
  for (Index i = 0; i < a.numel(); ++i) out[i] = a[i];
  return out;
}

bool isColumnVector(const Shape& s) { return s.rank() == 2 && s.cols() == 1 && s.rows() != 1; }

NumArray keepUnmarked(const NumArray& a, const std::vector<bool>& drop) {
  std::vector<double> kept;
  kept.reserve(static_cast<std::size_t>(a.numel()));
  for (Index i = 0; i < a.numel(); ++i)
    if (!drop[static_cast<std::size_t>(i)]) kept.push_back(a[i]);
  return isColumnVector(a.shape()) ? NumArray::column(kept) : NumArray::row(kept);
}

void requireMaskFits(const NumArray& a, const BoolMask& mask) {
  if (mask.numel() != a.numel()) {
    throw ShapeError("logical index of size " + mask.shape().str() + " does not match array of size " +
                     a.shape().str());
  }
}

}  // namespace

std::vector<Index> resolveSelector(const Selector& s, Index extent, Index dim) {
  return std::visit(
      Overloaded{
          [&](const idx::All&) {
            std::vector<Index> out(static_cast<std::size_t>(extent));
            for (Index i = 0; i < extent; ++i) out[static_cast<std::size_t>(i)] = i;
            return out;
          },
          [&](const Offset& o) { return std::vector<Index>{checked(o.resolve(extent), extent, dim)}; },
          [&](const idx::Range& r) {
            const NumArray steps = colonRange(static_cast<double>(r.start.resolve(extent)),
                                              static_cast<double>(r.step),
                                              static_cast<double>(r.stop.resolve(extent)));
            std::vector<Index> out;
            out.reserve(static_cast<std::size_t>(steps.numel()));
            for (double v : steps.values()) out.push_back(checked(static_cast<Index>(v), extent, dim));
            return out;
          },
          [&](const idx::List& l) {
            std::vector<Index> out;
            out.reserve(l.items.size());
            for (const auto& o : l.items) out.push_back(checked(o.resolve(extent), extent, dim));
            return out;
          },
      },
      s);
}

NumArray extract(const NumArray& a, const IndexExpr& ix) {
  if (ix.isLinear()) {
    const Selector& s = ix.selectors().front();
    const auto pos = resolveSelector(s, a.numel(), 0);
    NumArray out(linearResultShape(s, static_cast<Index>(pos.size())));
    for (std::size_t i = 0; i < pos.size(); ++i) out[static_cast<Index>(i)] = a[pos[i]];
    return out;
  }
  const auto picks = resolveAll(a, ix);
  std::vector<Index> dims;
  for (const auto& p : picks) dims.push_back(static_cast<Index>(p.size()));
  NumArray out{Shape(dims)};
  forEachSelected(a.shape(), picks, [&](Index dest, Index src) { out[dest] = a[src]; });
  return out;
}

NumArray extract(const NumArray& a, const NumArray& positions) {
  NumArray out(positions.shape());
  for (Index i = 0; i < positions.numel(); ++i) {
    const double p = positions[i];
    if (p != std::floor(p)) {
      throw IndexError("subscript indices must be either positive integers or logicals, got " +
                       std::to_string(p));
    }
    out[i] = a[checked(static_cast<Index>(p), a.numel(), 0)];
  }
  return out;
}

NumArray assignIndexed(const NumArray& a, const IndexExpr& ix, const NumArray& rhs) {
  if (ix.isLinear()) {
    const Selector& s = ix.selectors().front();
    NumArray base = a;
    if (const auto* o = std::get_if<Offset>(&s)) {
      const Index target = o->resolve(a.numel());
      if (target > a.numel() && (a.isVector() || a.isEmpty())) base = growVector(a, target);
    }
    const auto pos = resolveSelector(s, base.numel(), 0);
    requireAssignable(linearResultShape(s, static_cast<Index>(pos.size())), rhs);
    NumArray out = std::move(base);
    const bool broadcastScalar = rhs.numel() == 1;
    for (std::size_t i = 0; i < pos.size(); ++i) out[pos[i]] = broadcastScalar ? rhs[0] : rhs[static_cast<Index>(i)];
    return out;
  }
  const auto picks = resolveAll(a, ix);
  std::vector<Index> dims;
  for (const auto& p : picks) dims.push_back(static_cast<Index>(p.size()));
  requireAssignable(Shape(dims), rhs);
  NumArray out = a;
  const bool broadcastScalar = rhs.numel() == 1;
  forEachSelected(a.shape(), picks, [&](Index dest, Index src) { out[src] = broadcastScalar ? rhs[0] : rhs[dest]; });
  return out;
}

NumArray assignIndexed(const NumArray& a, const IndexExpr& ix, double rhs) {
  return assignIndexed(a, ix, NumArray::scalar(rhs));
}

NumArray deleteElements(const NumArray& a, const IndexExpr& where) {
  if (!where.isLinear()) {
    throw ArgumentError("deleteElements: only linear index expressions are supported");
  }
  std::vector<bool> drop(static_cast<std::size_t>(a.numel()), false);
  for (Index p : resolveSelector(where.selectors().front(), a.numel(), 0)) drop[static_cast<std::size_t>(p)] = true;
  return keepUnmarked(a, drop);
}

NumArray deleteElements(const NumArray& a, const BoolMask& where) {
  requireMaskFits(a, where);
  std::vector<bool> drop(static_cast<std::size_t>(a.numel()));
  for (Index i = 0; i < a.numel(); ++i) drop[static_cast<std::size_t>(i)] = where[i];
  return keepUnmarked(a, drop);
}

NumArray logicalExtract(const NumArray& a, const BoolMask& mask) {
  requireMaskFits(a, mask);
  NumArray out(Shape{countTrue(mask), 1});
  Index w = 0;
  for (Index i = 0; i < a.numel(); ++i)
    if (mask[i]) out[w++] = a[i];
  return out;
}

NumArray logicalAssign(const NumArray& a, const BoolMask& mask, double rhs) {
  requireMaskFits(a, mask);
  NumArray out = a;
  for (Index i = 0; i < a.numel(); ++i)
    if (mask[i]) out[i] = rhs;
  return out;
}

NumArray logicalAssign(const NumArray& a, const BoolMask& mask, const NumArray& rhs) {
  if (rhs.numel() == 1) return logicalAssign(a, mask, rhs[0]);
  requireMaskFits(a, mask);
  const Index n = countTrue(mask);
  if (rhs.numel() != n) {
    throw ShapeError("=: nonconformant arguments (op1 is 1x" + std::to_string(n) + ", op2 is " +
                     rhs.shape().str() + ")");
  }
  NumArray out = a;
  Index r = 0;
  for (Index i = 0; i < a.numel(); ++i)
    if (mask[i]) out[i] = rhs[r++];
  return out;
}

bool any(const BoolMask& m) { return m.data().any(); }
bool all(const BoolMask& m) { return m.data().all(); }
Index countTrue(const BoolMask& m) { return m.data().count(); }

BoolMask isnan(const NumArray& a) {
  BoolMask out(a.shape());
  for (Index i = 0; i < a.numel(); ++i) out[i] = std::isnan(a[i]);
  return out;
}

}  // namespace octvec
