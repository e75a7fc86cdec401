#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace octvec {

using Index = std::ptrdiff_t;

/// Per-dimension extents of a dense array.
///
/// Always holds at least two dimensions. Trailing singleton dimensions past
/// the second are trimmed, so `{2, 3, 1, 1}` and `{2, 3}` compare equal.
/// Querying a dimension past the stored rank yields 1.
class Shape {
 public:
  Shape() : dims_{0, 0} {}
  Shape(std::initializer_list<Index> dims);
  explicit Shape(std::vector<Index> dims);

  Index rank() const { return static_cast<Index>(dims_.size()); }
  /// Extent of 0-based dimension `d`; 1 for `d >= rank()`.
  Index dim(Index d) const { return d < rank() ? dims_[static_cast<std::size_t>(d)] : 1; }
  Index operator[](Index d) const { return dim(d); }
  Index numel() const;
  std::span<const Index> dims() const { return dims_; }

  Index rows() const { return dims_[0]; }
  Index cols() const { return dims_[1]; }
  bool isEmpty() const { return numel() == 0; }
  bool isMatrix() const { return rank() == 2; }
  /// 1xn or nx1 (including 1x1 and the empty 1x0 / 0x1).
  bool isVector() const;

  /// Extents with dimension `d` replaced; rank grows as needed.
  Shape withDim(Index d, Index extent) const;

  /// Column-major strides, one per stored dimension.
  std::vector<Index> strides() const;

  /// "4x4", "1x1x3".
  std::string str() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  void normalize();
  std::vector<Index> dims_;
};

/// 1-based subscripts to 1-based linear index (column-major).
Index sub2ind(const Shape& shape, std::span<const Index> subscripts);
inline Index sub2ind(const Shape& shape, std::initializer_list<Index> subscripts) {
  return sub2ind(shape, std::span<const Index>(subscripts.begin(), subscripts.size()));
}

/// 1-based linear index to 1-based subscripts, one per stored dimension.
std::vector<Index> ind2sub(const Shape& shape, Index linear);

}  // namespace octvec
