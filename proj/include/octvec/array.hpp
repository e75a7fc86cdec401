#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <span>
#include <vector>

#include "octvec/errors.hpp"
#include "octvec/shape.hpp"

namespace octvec {

/// Column-major dense array with an explicit shape.
///
/// Storage is a flat Eigen column vector; element (i1, i2, ..., ik) lives at
/// i1 + i2*d1 + i3*d1*d2 + ... (0-based). Element accessors on this class are
/// 0-based like Eigen's. The Octave-facing helpers elsewhere (index
/// expressions, `sub2ind`, dimension arguments, returned positions) are
/// 1-based.
template <typename Scalar>
class DenseArray {
 public:
  using value_type = Scalar;
  using Buffer = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  DenseArray() = default;
  explicit DenseArray(Shape shape, Scalar fill = Scalar{})
      : shape_(std::move(shape)), data_(Buffer::Constant(shape_.numel(), fill)) {}
  DenseArray(Shape shape, Buffer data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != shape_.numel()) {
      throw ShapeError("buffer holds " + std::to_string(data_.size()) + " elements, shape " +
                       shape_.str() + " needs " + std::to_string(shape_.numel()));
    }
  }

  static DenseArray constant(Shape shape, Scalar v) { return DenseArray(std::move(shape), v); }
  static DenseArray scalar(Scalar v) { return DenseArray(Shape{1, 1}, v); }

  /// Column-major buffer from a flat list.
  static DenseArray fromColumnMajor(Shape shape, std::span<const Scalar> values) {
    Buffer b(static_cast<Index>(values.size()));
    std::copy(values.begin(), values.end(), b.data());
    return DenseArray(std::move(shape), std::move(b));
  }
  static DenseArray row(std::span<const Scalar> values) {
    return fromColumnMajor(Shape{1, static_cast<Index>(values.size())}, values);
  }
  static DenseArray row(std::initializer_list<Scalar> values) {
    return row(std::span<const Scalar>(values.begin(), values.size()));
  }
  static DenseArray column(std::span<const Scalar> values) {
    return fromColumnMajor(Shape{static_cast<Index>(values.size()), 1}, values);
  }
  static DenseArray column(std::initializer_list<Scalar> values) {
    return column(std::span<const Scalar>(values.begin(), values.size()));
  }

  /// Matrix from a row-major literal, `{{1, 2, 3}, {4, 5, 6}}`.
  static DenseArray fromRows(const std::vector<std::vector<Scalar>>& rows) {
    const Index m = static_cast<Index>(rows.size());
    const Index n = m == 0 ? 0 : static_cast<Index>(rows.front().size());
    DenseArray out(Shape{m, n});
    for (Index i = 0; i < m; ++i) {
      const auto& r = rows[static_cast<std::size_t>(i)];
      if (static_cast<Index>(r.size()) != n) {
        throw ShapeError("vertical dimensions mismatch: row " + std::to_string(i + 1) + " has " +
                         std::to_string(r.size()) + " columns, expected " + std::to_string(n));
      }
      for (Index j = 0; j < n; ++j) out(i, j) = r[static_cast<std::size_t>(j)];
    }
    return out;
  }
  static DenseArray fromRows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    std::vector<std::vector<Scalar>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return fromRows(v);
  }

  const Shape& shape() const { return shape_; }
  Index rank() const { return shape_.rank(); }
  Index dim(Index d) const { return shape_.dim(d); }
  Index rows() const { return shape_.rows(); }
  Index cols() const { return shape_.cols(); }
  Index numel() const { return data_.size(); }
  bool isEmpty() const { return numel() == 0; }
  bool isVector() const { return shape_.isVector(); }
  bool isScalar() const { return numel() == 1; }

  const Buffer& data() const { return data_; }
  Buffer& data() { return data_; }
  std::span<const Scalar> values() const { return {data_.data(), static_cast<std::size_t>(data_.size())}; }

  Scalar operator[](Index linear) const { return data_[linear]; }
  Scalar& operator[](Index linear) { return data_[linear]; }
  Scalar operator()(Index i, Index j) const { return data_[i + j * shape_.rows()]; }
  Scalar& operator()(Index i, Index j) { return data_[i + j * shape_.rows()]; }
  Scalar operator()(Index i, Index j, Index k) const { return data_[i + shape_.rows() * (j + k * shape_.cols())]; }
  Scalar& operator()(Index i, Index j, Index k) { return data_[i + shape_.rows() * (j + k * shape_.cols())]; }

  /// Value of the single element of a 1x1 array.
  Scalar item() const {
    if (numel() != 1) throw ShapeError("expected a 1x1 array, got " + shape_.str());
    return data_[0];
  }

  /// Same shape and bitwise-identical payload. NaN matches NaN here, which is
  /// what the exact equivalence checks need.
  friend bool operator==(const DenseArray& a, const DenseArray& b) {
    if (a.shape_ != b.shape_) return false;
    if constexpr (std::is_floating_point_v<Scalar>) {
      return a.numel() == 0 ||
             std::memcmp(a.data_.data(), b.data_.data(), sizeof(Scalar) * a.data_.size()) == 0;
    } else {
      return (a.data_ == b.data_).all();
    }
  }

 private:
  Shape shape_;
  Buffer data_;
};

using NumArray = DenseArray<double>;
using BoolMask = DenseArray<bool>;

/// Distance from 1.0 to the next double, 2^-52.
inline constexpr double kEps = 0x1p-52;

}  // namespace octvec
