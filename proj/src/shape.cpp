#include "octvec/shape.hpp"

#include <numeric>

#include "octvec/errors.hpp"

namespace octvec {

Shape::Shape(std::initializer_list<Index> dims) : dims_(dims) { normalize(); }

Shape::Shape(std::vector<Index> dims) : dims_(std::move(dims)) { normalize(); }

void Shape::normalize() {
  for (Index d : dims_) {
    if (d < 0) throw ShapeError("negative dimension in shape");
  }
  while (dims_.size() < 2) dims_.push_back(dims_.empty() ? 0 : 1);
  while (dims_.size() > 2 && dims_.back() == 1) dims_.pop_back();
}

Index Shape::numel() const {
  return std::accumulate(dims_.begin(), dims_.end(), Index{1}, std::multiplies<>());
}

bool Shape::isVector() const { return rank() == 2 && (dims_[0] == 1 || dims_[1] == 1); }

Shape Shape::withDim(Index d, Index extent) const {
  std::vector<Index> dims = dims_;
  if (d >= rank()) dims.resize(static_cast<std::size_t>(d + 1), 1);
  dims[static_cast<std::size_t>(d)] = extent;
  return Shape(std::move(dims));
}

std::vector<Index> Shape::strides() const {
  std::vector<Index> s(dims_.size());
  Index stride = 1;
  for (std::size_t t = 0; t < dims_.size(); ++t) {
    s[t] = stride;
    stride *= dims_[t];
  }
  return s;
}

std::string Shape::str() const {
  std::string s;
  for (std::size_t t = 0; t < dims_.size(); ++t) {
    if (t) s += 'x';
    s += std::to_string(dims_[t]);
  }
  return s;
}

Index sub2ind(const Shape& shape, std::span<const Index> subscripts) {
  if (subscripts.empty()) throw ArgumentError("sub2ind: need at least one subscript");
  Index linear = 0;
  Index stride = 1;
  const Index k = static_cast<Index>(subscripts.size());
  for (Index t = 0; t < k; ++t) {
    // Last subscript addresses the remaining dimensions folded together.
    Index ext = shape.dim(t);
    if (t == k - 1) {
      for (Index r = k; r < shape.rank(); ++r) ext *= shape.dim(r);
    }
    const Index s = subscripts[static_cast<std::size_t>(t)];
    if (s < 1 || s > ext) {
      throw IndexError("sub2ind: index " + std::to_string(s) + " out of bound " + std::to_string(ext) +
                       " in dimension " + std::to_string(t + 1));
    }
    linear += (s - 1) * stride;
    stride *= ext;
  }
  return linear + 1;
}

std::vector<Index> ind2sub(const Shape& shape, Index linear) {
  if (linear < 1 || linear > shape.numel()) {
    throw IndexError("ind2sub: index " + std::to_string(linear) + " out of range for " + shape.str());
  }
  std::vector<Index> sub(static_cast<std::size_t>(shape.rank()));
  Index rem = linear - 1;
  for (Index t = 0; t < shape.rank(); ++t) {
    sub[static_cast<std::size_t>(t)] = rem % shape.dim(t) + 1;
    rem /= shape.dim(t);
  }
  return sub;
}

}  // namespace octvec
