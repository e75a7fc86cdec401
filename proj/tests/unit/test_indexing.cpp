#include <doctest.h>

#include <cmath>

#include "octvec/octvec.hpp"
#include "support/oracles.hpp"

using namespace octvec;

namespace {
const NumArray M = magic(4);
}

TEST_CASE("linear index expressions") {
  CHECK(extract(M, IndexExpr::linear(idx::range(3, 7))) == NumArray::row({9, 4, 2, 11, 7}));
  CHECK(extract(M, IndexExpr::linear(idx::range(12, idx::end))) == NumArray::row({15, 13, 8, 12, 1}));
  CHECK(extract(M, IndexExpr::linear(idx::list({1, 3, 5}))) == NumArray::row({16, 9, 2}));
  CHECK(extract(M, IndexExpr::linear(idx::all)).shape() == Shape{16, 1});
  CHECK(extract(M, IndexExpr::linear(idx::end)) == NumArray::scalar(1));
}

TEST_CASE("two-dimensional index expressions") {
  CHECK(extract(M, {idx::range(1, 2), idx::range(2, 3)}) == NumArray::fromRows({{2, 3}, {11, 10}}));
  CHECK(extract(M, {idx::end, idx::range(idx::end - 1, idx::end)}) == NumArray::row({15, 1}));
  CHECK(extract(M, {3, idx::all}) == NumArray::row({9, 7, 6, 12}));
  CHECK(extract(M, {idx::all, 2}) == NumArray::column({2, 11, 7, 14}));
  CHECK(extract(M, {idx::range(idx::end, -1, 1), 1}) == NumArray::column({4, 9, 5, 16}));
  CHECK(extract(M, {idx::all, idx::range(2, 2, idx::end)}).shape() == Shape{4, 2});
}

TEST_CASE("out-of-range and malformed indices") {
  CHECK_THROWS_AS(extract(M, {5, 1}), IndexError);
  CHECK_THROWS_AS(extract(M, {0, 1}), IndexError);
  CHECK_THROWS_AS(extract(M, IndexExpr::linear(17)), IndexError);
  CHECK_THROWS_AS(extract(M, {1, 1, 1}), ArgumentError);
  try {
    extract(M, {5, 1});
  } catch (const IndexError& e) {
    CHECK(std::string(e.what()).find("out of bound") != std::string::npos);
  }
}

TEST_CASE("indexed assignment") {
  NumArray a = assignIndexed(M, {idx::all, idx::range(2, 2, idx::end)}, flipud(extract(M, {idx::all, idx::range(2, 2, idx::end)})));
  CHECK(extract(a, IndexExpr::linear(idx::all)) ==
        NumArray::column({16, 5, 9, 4, 14, 7, 11, 2, 3, 10, 6, 15, 1, 12, 8, 13}));
  a = assignIndexed(M, {2, idx::all}, 0.0);
  CHECK(extract(a, {2, idx::all}) == NumArray::row({0, 0, 0, 0}));
  CHECK_THROWS_AS(assignIndexed(M, {2, idx::all}, NumArray::row({1, 2})), ShapeError);
  const NumArray grown = assignIndexed(NumArray::row({1, 2}), IndexExpr::linear(5), 9.0);
  CHECK(grown == NumArray::row({1, 2, 0, 0, 9}));
}

TEST_CASE("element deletion") {
  CHECK(deleteElements(NumArray::row({1, 0, 2, 0}), eq(NumArray::row({1, 0, 2, 0}), 0.0)) == NumArray::row({1, 2}));
  CHECK(deleteElements(NumArray::column({1, 0, 2}), IndexExpr::linear(2)) == NumArray::column({1, 2}));
  CHECK(deleteElements(M, M > 8.0).shape() == Shape{1, 8});
}

TEST_CASE("logical indexing") {
  const BoolMask lt = M < 8.0;
  CHECK(countTrue(lt) == 7);
  CHECK(transpose(logicalExtract(M, lt)) == NumArray::row({5, 4, 2, 7, 3, 6, 1}));
  CHECK_THROWS_AS(logicalExtract(M, NumArray::row({1, 2}) < 8.0), ShapeError);
  NumArray withNan = assignIndexed(M, {1, 1}, std::nan(""));
  CHECK(countTrue(isnan(withNan)) == 1);
  CHECK(logicalAssign(withNan, isnan(withNan), 0.0) == assignIndexed(M, {1, 1}, 0.0));
  CHECK(any(M < 2.0));
  CHECK_FALSE(all(M < 16.0));
  CHECK(all(M > 0.0));
}

TEST_CASE("logical extraction matches a scan over the mask") {
  oracle::Gen g(11);
  for (int trial = 0; trial < 50; ++trial) {
    const NumArray a = g.integerMatrix(g.integer(1, 9), g.integer(1, 9), -5, 5);
    const BoolMask m = a > 0.0;
    std::vector<double> expected;
    for (Index i = 0; i < a.numel(); ++i)
      if (a[i] > 0) expected.push_back(a[i]);
    CHECK(oracle::values(logicalExtract(a, m)) == expected);
  }
}

TEST_CASE("assignment and deletion edge cases") {
  CHECK(assignIndexed(NumArray(Shape{1, 0}), IndexExpr::linear(3), 7.0) == NumArray::row({0, 0, 7}));
  CHECK(assignIndexed(M, {idx::all, idx::all}, 0.0) == zeros(4, 4));
  const NumArray z = NumArray::fromRows({{0, 5}, {7, 0}});
  CHECK(deleteElements(z, eq(z, 0.0)) == NumArray::row({7, 5}));
  CHECK(deleteElements(M, M > 100.0) == transpose(extract(M, IndexExpr::linear(idx::all))));
  CHECK(logicalExtract(M, M > 100.0).numel() == 0);
  CHECK(logicalExtract(M, M > 0.0) == extract(M, IndexExpr::linear(idx::all)));
  CHECK(logicalAssign(M, M > 100.0, 1.0) == M);
  const NumArray two = logicalAssign(NumArray::row({1, 2, 3}), NumArray::row({1, 2, 3}) > 1.0, NumArray::row({9, 9}));
  CHECK(two == NumArray::row({1, 9, 9}));
}

TEST_CASE("any, all and isnan") {
  CHECK(any(NumArray::row({5, 60}) < 10.0));
  CHECK(all(NumArray::row({45, 60}) > 40.0));
  const BoolMask empty(Shape{0, 0});
  CHECK_FALSE(any(empty));
  CHECK(all(empty));
  CHECK_FALSE(any(isnan(M)));
  CHECK(all(isnan(NumArray::scalar(std::nan("")) + M)));
}

TEST_CASE("randomized indexing properties") {
  oracle::Gen g(13);
  for (int t = 0; t < 60; ++t) {
    const Index m = g.integer(1, 8), n = g.integer(1, 8);
    const NumArray a = g.integerMatrix(m, n, -9, 9);
    CHECK(oracle::values(extract(a, IndexExpr::linear(idx::all))) == oracle::values(a));

    const BoolMask lt = a < 2.0;
    const NumArray picked = logicalExtract(a, lt);
    CHECK(picked.numel() == countTrue(lt));
    CHECK(all(picked < 2.0));

    const Index r0 = g.integer(1, m), r1 = g.integer(r0, m);
    const Index c0 = g.integer(1, n), c1 = g.integer(c0, n);
    const IndexExpr ix{idx::range(r0, r1), idx::range(c0, c1)};
    const NumArray rhs = g.integerMatrix(r1 - r0 + 1, c1 - c0 + 1, 100, 200);
    CHECK(extract(assignIndexed(a, ix, rhs), ix) == rhs);

    std::vector<double> kept;
    for (Index i = 0; i < a.numel(); ++i)
      if (!(a[i] > 0)) kept.push_back(a[i]);
    CHECK(oracle::values(deleteElements(a, a > 0.0)) == kept);
  }
}
