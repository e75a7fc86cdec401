#include "octvec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace octvec {

namespace {

void requireMatrix(const NumArray& a, const char* op) {
  if (a.rank() != 2) throw ShapeError(std::string(op) + ": expected a 2-D matrix, got " + a.shape().str());
}

void requireSquare(const NumArray& a, const char* op) {
  requireMatrix(a, op);
  if (a.rows() != a.cols()) throw ShapeError(std::string(op) + ": matrix must be square, got " + a.shape().str());
}

}  // namespace

NumArray matmul(const NumArray& a, const NumArray& b) {
  requireMatrix(a, "matmul");
  requireMatrix(b, "matmul");
  if (a.cols() != b.rows()) {
    throw ShapeError("operator *: nonconformant arguments (op1 is " + a.shape().str() + ", op2 is " +
                     b.shape().str() + ")");
  }
  const Index p = a.rows(), q = a.cols(), r = b.cols();
  NumArray out(Shape{p, r}, 0.0);
  for (Index j = 0; j < r; ++j) {
    for (Index i = 0; i < p; ++i) {
      double acc = 0.0;
      for (Index k = 0; k < q; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

double dot(const NumArray& a, const NumArray& b) {
  if (!a.isVector() || !b.isVector() || a.numel() != b.numel()) {
    throw ShapeError("dot: sizes of X and Y must match (" + a.shape().str() + " vs " + b.shape().str() + ")");
  }
  double acc = 0.0;
  for (Index i = 0; i < a.numel(); ++i) acc += a[i] * b[i];
  return acc;
}

double normInf(const NumArray& a) {
  requireMatrix(a, "normInf");
  double best = 0.0;
  for (Index i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (Index j = 0; j < a.cols(); ++j) row += std::fabs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

NumArray mldivide(const NumArray& a, const NumArray& b) {
  requireSquare(a, "mldivide");
  requireMatrix(b, "mldivide");
  const Index n = a.rows();
  if (b.rows() != n) {
    throw ShapeError("operator \\: nonconformant arguments (op1 is " + a.shape().str() + ", op2 is " +
                     b.shape().str() + ")");
  }
  NumArray lu = a;
  NumArray x = b;
  const Index rhs = b.cols();
  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    double best = std::fabs(lu(k, k));
    for (Index i = k + 1; i < n; ++i) {
      if (std::fabs(lu(i, k)) > best) {
        best = std::fabs(lu(i, k));
        pivot = i;
      }
    }
    if (best == 0.0) throw SingularMatrixError("mldivide: matrix is singular (zero pivot column " + std::to_string(k + 1) + ")");
    if (pivot != k) {
      for (Index j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      for (Index j = 0; j < rhs; ++j) std::swap(x(k, j), x(pivot, j));
    }
    for (Index i = k + 1; i < n; ++i) {
      const double f = lu(i, k) / lu(k, k);
      lu(i, k) = f;
      for (Index j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      for (Index j = 0; j < rhs; ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (Index j = 0; j < rhs; ++j) {
    for (Index i = n - 1; i >= 0; --i) {
      double acc = x(i, j);
      for (Index k = i + 1; k < n; ++k) acc -= lu(i, k) * x(k, j);
      x(i, j) = acc / lu(i, i);
    }
  }
  return x;
}

EigResult eigSym(const NumArray& s) {
  requireSquare(s, "eigSym");
  const Index n = s.rows();
  const double scale = normInf(s);
  double asym = 0.0;
  for (Index i = 0; i < n; ++i) {
    double row = 0.0;
    for (Index j = 0; j < n; ++j) row += std::fabs(s(i, j) - s(j, i));
    asym = std::max(asym, row);
  }
  if (asym > 1e-9 * scale) throw ArgumentError("eigSym: matrix is not symmetric");

  NumArray a = s;
  NumArray v(Shape{n, n}, 0.0);
  for (Index i = 0; i < n; ++i) v(i, i) = 1.0;
  const double tol = 1e-12 * scale;
  auto maxOffDiagonal = [&] {
    double m = 0.0;
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i)
        if (i != j) m = std::max(m, std::fabs(a(i, j)));
    return m;
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && maxOffDiagonal() > tol; ++sweep) {
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation zeroing a(p, q): tan of the angle is the smaller root of
        // t^2 + 2 * theta * t - 1 = 0.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }
  if (maxOffDiagonal() > tol) {
    throw NumericError("eigSym: Jacobi iteration did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return a(x, x) < a(y, y); });

  EigResult r{NumArray(Shape{n, n}), NumArray(Shape{n, 1})};
  for (Index c = 0; c < n; ++c) {
    const Index src = order[static_cast<std::size_t>(c)];
    r.values[c] = a(src, src);
    Index lead = 0;
    for (Index k = 1; k < n; ++k)
      if (std::fabs(v(k, src)) > std::fabs(v(lead, src))) lead = k;
    const double sign = v(lead, src) < 0.0 ? -1.0 : 1.0;
    for (Index k = 0; k < n; ++k) r.vectors(k, c) = sign * v(k, src);
  }
  return r;
}

NumArray dctmtx(Index n) {
  if (n < 1) throw ArgumentError("dctmtx: n must be at least 1, got " + std::to_string(n));
  NumArray t(Shape{n, n});
  const double dn = static_cast<double>(n);
  const double dc = 1.0 / std::sqrt(dn);
  const double ac = std::sqrt(2.0 / dn);
  for (Index j = 0; j < n; ++j) {
    t(0, j) = dc;
    for (Index i = 1; i < n; ++i) {
      t(i, j) = ac * std::cos(std::numbers::pi * static_cast<double>((2 * j + 1) * i) / (2.0 * dn));
    }
  }
  return t;
}

DiagBand spdiagsExtract(const NumArray& a) {
  requireMatrix(a, "spdiags");
  const Index m = a.rows(), n = a.cols();
  const Index bandRows = std::min(m, n);
  const Index count = m == 0 || n == 0 ? 0 : m + n - 1;
  DiagBand r{NumArray(Shape{bandRows, count}, 0.0), {}};
  r.offsets.reserve(static_cast<std::size_t>(count));
  for (Index k = 0; k < count; ++k) {
    const Index d = k - (m - 1);
    r.offsets.push_back(d);
    for (Index i = std::max<Index>(0, -d); i < std::min(m, n - d); ++i) {
      const Index row = m <= n ? i : i + d;
      r.bands(row, k) = a(i, i + d);
    }
  }
  return r;
}

}  // namespace octvec
