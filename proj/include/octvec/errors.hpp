#pragma once

#include <stdexcept>
#include <string>

namespace octvec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element counts or extents do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Operand extents cannot be broadcast against each other.
class BroadcastError : public Error {
 public:
  using Error::Error;
};

/// A resolved index falls outside the indexed dimension.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument is out of its valid domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Partial pivoting found an all-zero pivot column.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Iterative method failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A user-supplied function value broke its output contract.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Image file header or payload is malformed.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Benchmark variants disagreed before timing.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace octvec
