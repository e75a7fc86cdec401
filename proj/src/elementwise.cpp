#include "octvec/elementwise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace octvec {

BroadcastPlan broadcastShapes(std::span<const Shape> shapes) {
  Index k = 2;
  for (const auto& s : shapes) k = std::max(k, s.rank());
  std::vector<Index> dims(static_cast<std::size_t>(k), 1);
  for (Index d = 0; d < k; ++d) {
    Index ext = 1;
    for (const auto& s : shapes) {
      const Index e = s.dim(d);
      if (e == 1) continue;
      if (ext != 1 && e != ext) {
        std::string msg = "operator: nonconformant arguments (";
        for (std::size_t i = 0; i < shapes.size(); ++i) {
          msg += (i ? ", op" : "op") + std::to_string(i + 1) + " is " + shapes[i].str();
        }
        throw BroadcastError(msg + ") in dimension " + std::to_string(d + 1));
      }
      ext = e;
    }
    dims[static_cast<std::size_t>(d)] = ext;
  }
  BroadcastPlan plan{Shape(dims), {}};
  for (const auto& s : shapes) {
    std::vector<Index> strides(static_cast<std::size_t>(k), 0);
    Index stride = 1;
    for (Index d = 0; d < k; ++d) {
      if (s.dim(d) != 1) strides[static_cast<std::size_t>(d)] = stride;
      stride *= s.dim(d);
    }
    plan.strides.push_back(std::move(strides));
  }
  return plan;
}

BroadcastPlan broadcastShapes(const Shape& a, const Shape& b) {
  const Shape shapes[] = {a, b};
  return broadcastShapes(shapes);
}

NumArray applyBroadcast(const BinaryFn& f, const NumArray& a, const NumArray& b) {
  return broadcastMap<double>(a, b, f);
}

NumArray ewBinary(BinaryOp op, const NumArray& a, const NumArray& b) {
  switch (op) {
    case BinaryOp::Plus:
      return broadcastMap<double>(a, b, [](double x, double y) { return x + y; });
    case BinaryOp::Minus:
      return broadcastMap<double>(a, b, [](double x, double y) { return x - y; });
    case BinaryOp::Times:
      return broadcastMap<double>(a, b, [](double x, double y) { return x * y; });
    case BinaryOp::Divide:
      return broadcastMap<double>(a, b, [](double x, double y) { return x / y; });
    case BinaryOp::Power:
      return broadcastMap<double>(a, b, [](double x, double y) { return y == 2.0 ? x * x : std::pow(x, y); });
  }
  throw ArgumentError("unknown binary operator");
}

BoolMask compare(CompareOp op, const NumArray& a, const NumArray& b) {
  switch (op) {
    case CompareOp::Less:
      return broadcastMap<bool>(a, b, [](double x, double y) { return x < y; });
    case CompareOp::LessEqual:
      return broadcastMap<bool>(a, b, [](double x, double y) { return x <= y; });
    case CompareOp::Greater:
      return broadcastMap<bool>(a, b, [](double x, double y) { return x > y; });
    case CompareOp::GreaterEqual:
      return broadcastMap<bool>(a, b, [](double x, double y) { return x >= y; });
    case CompareOp::Equal:
      return broadcastMap<bool>(a, b, [](double x, double y) { return x == y; });
    case CompareOp::NotEqual:
      return broadcastMap<bool>(a, b, [](double x, double y) { return x != y; });
  }
  throw ArgumentError("unknown comparison operator");
}

NumArray ewUnary(UnaryOp op, const NumArray& a) {
  switch (op) {
    case UnaryOp::Abs:
      return map<double>(a, [](double x) { return std::fabs(x); });
    case UnaryOp::Sqrt:
      return map<double>(a, [](double x) { return std::sqrt(x); });
    case UnaryOp::Neg:
      return map<double>(a, [](double x) { return -x; });
    case UnaryOp::Cos:
      return map<double>(a, [](double x) { return std::cos(x); });
    case UnaryOp::Sin:
      return map<double>(a, [](double x) { return std::sin(x); });
  }
  throw ArgumentError("unknown unary operator");
}

BoolMask operator|(const BoolMask& a, const BoolMask& b) {
  return broadcastMap<bool>(a, b, [](bool x, bool y) { return x || y; });
}

BoolMask operator&(const BoolMask& a, const BoolMask& b) {
  return broadcastMap<bool>(a, b, [](bool x, bool y) { return x && y; });
}

BoolMask operator!(const BoolMask& a) {
  return map<bool>(a, [](bool x) { return !x; });
}

NumArray toNumeric(const BoolMask& m) {
  return map<double>(m, [](bool x) { return x ? 1.0 : 0.0; });
}

NumArray merge(const BoolMask& mask, const NumArray& a, const NumArray& b) {
  return broadcastMap<double>(mask, a, b, [](bool m, double x, double y) { return m ? x : y; });
}

}  // namespace octvec
