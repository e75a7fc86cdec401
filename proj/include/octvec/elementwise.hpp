#pragma once

#include "octvec/array.hpp"
#include "octvec/broadcast.hpp"

namespace octvec {

enum class BinaryOp { Plus, Minus, Times, Divide, Power };
enum class CompareOp { Less, LessEqual, Greater, GreaterEqual, Equal, NotEqual };
enum class UnaryOp { Abs, Sqrt, Neg, Cos, Sin };

/// IEEE-754 elementwise arithmetic with broadcasting.
NumArray ewBinary(BinaryOp op, const NumArray& a, const NumArray& b);
BoolMask compare(CompareOp op, const NumArray& a, const NumArray& b);
NumArray ewUnary(UnaryOp op, const NumArray& a);

// Arithmetic operators are elementwise, as for Eigen arrays; the matrix
// product is `matmul`. Relational operators yield masks. `==` stays value
// equality of whole arrays; elementwise equality is `eq`.

inline NumArray operator+(const NumArray& a, const NumArray& b) { return ewBinary(BinaryOp::Plus, a, b); }
inline NumArray operator-(const NumArray& a, const NumArray& b) { return ewBinary(BinaryOp::Minus, a, b); }
inline NumArray operator*(const NumArray& a, const NumArray& b) { return ewBinary(BinaryOp::Times, a, b); }
inline NumArray operator/(const NumArray& a, const NumArray& b) { return ewBinary(BinaryOp::Divide, a, b); }
inline NumArray operator+(const NumArray& a, double b) { return a + NumArray::scalar(b); }
inline NumArray operator-(const NumArray& a, double b) { return a - NumArray::scalar(b); }
inline NumArray operator*(const NumArray& a, double b) { return a * NumArray::scalar(b); }
inline NumArray operator/(const NumArray& a, double b) { return a / NumArray::scalar(b); }
inline NumArray operator+(double a, const NumArray& b) { return NumArray::scalar(a) + b; }
inline NumArray operator-(double a, const NumArray& b) { return NumArray::scalar(a) - b; }
inline NumArray operator*(double a, const NumArray& b) { return NumArray::scalar(a) * b; }
inline NumArray operator/(double a, const NumArray& b) { return NumArray::scalar(a) / b; }
inline NumArray operator-(const NumArray& a) { return ewUnary(UnaryOp::Neg, a); }

inline NumArray power(const NumArray& a, const NumArray& b) { return ewBinary(BinaryOp::Power, a, b); }
inline NumArray power(const NumArray& a, double b) { return power(a, NumArray::scalar(b)); }

inline BoolMask operator<(const NumArray& a, const NumArray& b) { return compare(CompareOp::Less, a, b); }
inline BoolMask operator<=(const NumArray& a, const NumArray& b) { return compare(CompareOp::LessEqual, a, b); }
inline BoolMask operator>(const NumArray& a, const NumArray& b) { return compare(CompareOp::Greater, a, b); }
inline BoolMask operator>=(const NumArray& a, const NumArray& b) { return compare(CompareOp::GreaterEqual, a, b); }
inline BoolMask operator<(const NumArray& a, double b) { return a < NumArray::scalar(b); }
inline BoolMask operator<=(const NumArray& a, double b) { return a <= NumArray::scalar(b); }
inline BoolMask operator>(const NumArray& a, double b) { return a > NumArray::scalar(b); }
inline BoolMask operator>=(const NumArray& a, double b) { return a >= NumArray::scalar(b); }
inline BoolMask eq(const NumArray& a, const NumArray& b) { return compare(CompareOp::Equal, a, b); }
inline BoolMask eq(const NumArray& a, double b) { return eq(a, NumArray::scalar(b)); }
inline BoolMask ne(const NumArray& a, const NumArray& b) { return compare(CompareOp::NotEqual, a, b); }
inline BoolMask ne(const NumArray& a, double b) { return ne(a, NumArray::scalar(b)); }

inline NumArray abs(const NumArray& a) { return ewUnary(UnaryOp::Abs, a); }
inline NumArray sqrt(const NumArray& a) { return ewUnary(UnaryOp::Sqrt, a); }
inline NumArray cos(const NumArray& a) { return ewUnary(UnaryOp::Cos, a); }
inline NumArray sin(const NumArray& a) { return ewUnary(UnaryOp::Sin, a); }

BoolMask operator|(const BoolMask& a, const BoolMask& b);
BoolMask operator&(const BoolMask& a, const BoolMask& b);
BoolMask operator!(const BoolMask& a);
inline BoolMask maskOr(const BoolMask& a, const BoolMask& b) { return a | b; }
inline BoolMask maskAnd(const BoolMask& a, const BoolMask& b) { return a & b; }
inline BoolMask maskNot(const BoolMask& a) { return !a; }

/// Logical mask as 0/1 doubles.
NumArray toNumeric(const BoolMask& m);

/// `ifelse(mask, a, b)`: mask ? a : b, all three broadcast together.
NumArray merge(const BoolMask& mask, const NumArray& a, const NumArray& b);
inline NumArray merge(const BoolMask& mask, double a, const NumArray& b) { return merge(mask, NumArray::scalar(a), b); }
inline NumArray merge(const BoolMask& mask, const NumArray& a, double b) { return merge(mask, a, NumArray::scalar(b)); }
inline NumArray merge(const BoolMask& mask, double a, double b) {
  return merge(mask, NumArray::scalar(a), NumArray::scalar(b));
}

}  // namespace octvec
