#pragma once

#include <variant>
#include <vector>

#include "octvec/array.hpp"

namespace octvec {

/// A 1-based position, either literal (`k`) or relative to the extent of
/// the dimension being indexed (`end - k`).
struct Offset {
  Offset(Index v) : value(v) {}  // NOLINT: literal positions convert implicitly
  Offset(Index v, bool relative) : value(v), fromEnd(relative) {}

  Index resolve(Index extent) const { return fromEnd ? extent - value : value; }

  Index value = 0;
  bool fromEnd = false;
};

namespace idx {

struct EndMarker {
  operator Offset() const { return Offset(0, true); }  // NOLINT
};
/// The `end` keyword: last index along the dimension being indexed.
inline constexpr EndMarker end{};
inline Offset operator-(EndMarker, Index k) { return Offset(k, true); }

/// The bare `:` selector.
struct All {};
inline constexpr All all{};

/// start:step:stop with end-relative bounds allowed.
struct Range {
  Offset start;
  Index step;
  Offset stop;
};
inline Range range(Offset start, Offset stop) { return Range{start, 1, stop}; }
inline Range range(Offset start, Index step, Offset stop) { return Range{start, step, stop}; }

struct List {
  std::vector<Offset> items;
};
inline List list(std::initializer_list<Offset> items) { return List{items}; }

}  // namespace idx

using Selector = std::variant<idx::All, Offset, idx::Range, idx::List>;

/// Either one selector per dimension, or a single selector applied to the
/// column-major flattening (linear indexing).
class IndexExpr {
 public:
  IndexExpr(std::initializer_list<Selector> perDim) : selectors_(perDim) {}
  explicit IndexExpr(std::vector<Selector> perDim) : selectors_(std::move(perDim)) {}

  static IndexExpr linear(Selector s) {
    IndexExpr e(std::vector<Selector>{std::move(s)});
    e.linear_ = true;
    return e;
  }

  bool isLinear() const { return linear_; }
  const std::vector<Selector>& selectors() const { return selectors_; }

 private:
  std::vector<Selector> selectors_;
  bool linear_ = false;
};

/// 0-based positions a selector picks from a dimension of `extent`.
/// `dim` (1-based, 0 for linear) only labels the error message.
std::vector<Index> resolveSelector(const Selector& s, Index extent, Index dim = 0);

/// Octave `A(...)`. Multi-dimensional form gives the Cartesian selection;
/// linear form gives a row for scalar/range/list selectors and a column for
/// `A(:)`.
NumArray extract(const NumArray& a, const IndexExpr& ix);

/// `A(P)` for an array of 1-based linear positions; result takes P's shape.
NumArray extract(const NumArray& a, const NumArray& positions);

/// `A(...) = rhs`. The rhs must match the selection up to singleton
/// dimensions, or be 1x1. A vector indexed linearly by a single position
/// past its end grows, zero-filled.
NumArray assignIndexed(const NumArray& a, const IndexExpr& ix, const NumArray& rhs);
NumArray assignIndexed(const NumArray& a, const IndexExpr& ix, double rhs);

/// `A(where) = []`. Remaining elements in column-major order, as a row
/// unless `a` is a column vector. Only linear index expressions are allowed.
NumArray deleteElements(const NumArray& a, const IndexExpr& where);
NumArray deleteElements(const NumArray& a, const BoolMask& where);

/// `A(mask)` as a column, column-major order.
NumArray logicalExtract(const NumArray& a, const BoolMask& mask);

/// `A(mask) = rhs`; rhs is a scalar or holds one value per true cell.
NumArray logicalAssign(const NumArray& a, const BoolMask& mask, double rhs);
NumArray logicalAssign(const NumArray& a, const BoolMask& mask, const NumArray& rhs);

/// Reductions over every element; empty gives any = false, all = true.
bool any(const BoolMask& m);
bool all(const BoolMask& m);
Index countTrue(const BoolMask& m);

BoolMask isnan(const NumArray& a);

}  // namespace octvec
