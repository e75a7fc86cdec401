#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "octvec/octvec.hpp"
#include "support/oracles.hpp"

using namespace octvec;

namespace {
const NumArray M = magic(4);
constexpr Variant kBoth[] = {Variant::Loop, Variant::Vectorized};
}  // namespace

TEST_CASE("scans of magic(4)") {
  for (Variant v : kBoth) {
    CHECK(disp(linearScan(M, v).sequence) ==
          "   16    5    9    4    2   11    7   14    3   10    6   15   13    8   12    1\n");
    CHECK(disp(boustrophedonScan(M, v).sequence) ==
          "   16    5    9    4   14    7   11    2    3   10    6   15    1   12    8   13\n");
    CHECK(oracle::values(zigzagScan(M, v).sequence) == oracle::kZigzagMagic4);
  }
}

TEST_CASE("zigzag follows the diagonals on any shape") {
  oracle::Gen g(21);
  for (int trial = 0; trial < 100; ++trial) {
    const NumArray a = g.integerMatrix(g.integer(1, 12), g.integer(1, 12), 1, 500);
    const auto expected = oracle::zigzagByDiagonals(a);
    CHECK(oracle::values(zigzagScan(a, Variant::Loop).sequence) == expected);
    CHECK(oracle::values(zigzagScan(a, Variant::Vectorized).sequence) == expected);
  }
}

TEST_CASE("scans of single rows and columns") {
  const NumArray r = NumArray::row({1, 2, 3});
  const NumArray c = NumArray::column({1, 2, 3});
  for (Variant v : kBoth) {
    CHECK(zigzagScan(r, v).sequence == NumArray::row({1, 2, 3}));
    CHECK(zigzagScan(c, v).sequence == NumArray::row({3, 2, 1}));
    CHECK(boustrophedonScan(r, v).sequence == NumArray::row({1, 2, 3}));
    CHECK(linearScan(c, v).sequence.shape() == Shape{1, 3});
  }
}

TEST_CASE("replace helpers") {
  CHECK(replaceNegative(NumArray::row({-1, 1, -2, 2, -3, 3})) == NumArray::row({0, 1, 0, 2, 0, 3}));
  CHECK(replaceNegNan(NumArray::row({0, 1, 2, -1, std::nan(""), 3, -2, 4})) == NumArray::row({0, 1, 2, 0, 0, 3, 0, 4}));
}

TEST_CASE("distance strategies against brute force") {
  oracle::Gen g(8);
  const NumArray p = g.matrix(40, 3);
  const auto ref = oracle::bruteDistances(p);
  for (auto s : {DistanceStrategy::Loop3, DistanceStrategy::RowBroadcast, DistanceStrategy::FullBroadcast}) {
    const NumArray d = distanceMatrix(p, s);
    REQUIRE(d.shape() == Shape{40, 40});
    double worst = 0.0;
    for (Index i = 0; i < 40; ++i)
      for (Index j = 0; j < 40; ++j) worst = std::max(worst, std::fabs(d(i, j) - ref[i][j]));
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("nearest neighbour with pluggable metrics") {
  const NumArray x = NumArray::fromRows({{0, 0}, {1, 1}, {2, 2}});
  const NumArray y = NumArray::fromRows({{0, 1}, {2, 1}});
  for (const MetricFn& metric : {metricEuclidean(), metricManhattan()}) {
    const NeighborResult r = nearestNeighbor(x, y, metric);
    CHECK(r.index == NumArray::column({1, 1, 2}));
    CHECK(r.distance == NumArray::column({1, 1, 1}));
  }
  const NeighborResult self = nearestNeighbor(x, x, metricEuclidean());
  CHECK(self.index == NumArray::column({1, 2, 3}));
  CHECK(self.distance == NumArray::column({0, 0, 0}));
  CHECK_THROWS_AS(nearestNeighbor(x, NumArray(Shape{0, 2}), metricEuclidean()), ArgumentError);
  CHECK_THROWS_AS(nearestNeighbor(x, NumArray::row({1, 2, 3}), metricEuclidean()), ShapeError);
}

TEST_CASE("nearest neighbour agrees with brute-force argmin") {
  oracle::Gen g(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = g.integer(1, 4);
    const NumArray x = g.matrix(g.integer(1, 15), d);
    const NumArray y = g.matrix(g.integer(1, 15), d);
    const NeighborResult r = nearestNeighbor(x, y, metricEuclidean());
    for (Index i = 0; i < x.rows(); ++i) {
      Index best = 0;
      double bestD = 0.0;
      for (Index k = 0; k < y.rows(); ++k) {
        double s = 0.0;
        for (Index c = 0; c < d; ++c) s += (x(i, c) - y(k, c)) * (x(i, c) - y(k, c));
        if (k == 0 || s < bestD) {
          best = k;
          bestD = s;
        }
      }
      CHECK(r.index[i] == static_cast<double>(best + 1));
    }
  }
}

TEST_CASE("pca diagonalizes the covariance") {
  oracle::Gen g(9);
  NumArray x = g.matrix(3, 200);
  x = assignIndexed(x, {1, idx::all}, extract(x, {1, idx::all}) * 5.0 + extract(x, {2, idx::all}));
  const PcaResult r = pca(x);
  const NumArray cy = covarianceOfRows(r.projected);
  const double tr = cy(0, 0) + cy(1, 1) + cy(2, 2);
  CHECK(normInf(matmul(transpose(r.components), r.components) - identity(3)) <= 1e-9);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      if (i != j) CHECK(std::fabs(cy(i, j)) <= 1e-9 * tr);
  CHECK_THROWS_AS(pca(NumArray(Shape{2, 1})), ArgumentError);
}

TEST_CASE("rgb2gray weights") {
  NumArray px(Shape{1, 1, 3});
  px[0] = 255;
  CHECK(std::fabs(rgb2gray(px).item() - 76.245) <= 1e-12);
  CHECK(rgb2gray(NumArray(Shape{2, 2, 3}, 100.0)) == NumArray(Shape{2, 2}, 100.0));
  CHECK(kLumaRed + kLumaGreen + kLumaBlue == doctest::Approx(1.0));
  CHECK_THROWS(rgb2gray(NumArray(Shape{2, 2})));
}

TEST_CASE("blockproc pads and tiles") {
  const NumArray a = reshape(colonRange(1, 9), Shape{3, 3});
  const NumArray r = blockproc(a, 2, 2, [](const NumArray& b) { return b * 2.0; });
  CHECK(r.shape() == Shape{4, 4});
  CHECK(extract(r, {idx::range(1, 3), idx::range(1, 3)}) == a * 2.0);
  CHECK(r(3, 3) == 0);
  CHECK_THROWS_AS(blockproc(a, 2, 2, [](const NumArray&) { return NumArray::scalar(1); }), ContractError);
}

TEST_CASE("dct2d round trips") {
  oracle::Gen g(10);
  const NumArray x = g.matrix(8, 8, 0, 255);
  const NumArray y = dct2d(x);
  CHECK(normInf(idct2d(y) - x) <= 1e-9);
  CHECK(std::fabs(sumAll(power(y, 2.0)) - sumAll(power(x, 2.0))) <= 1e-9 * sumAll(power(x, 2.0)));
  CHECK(dct2d(NumArray(Shape{8, 8}, 128.0))(0, 0) == doctest::Approx(1024.0));
  const NumArray img = g.matrix(24, 16, 0, 255);
  CHECK(normInf(blockproc(blockproc(img, 8, 8, dct2dHandle(8)), 8, 8, idct2dHandle(8)) - img) <= 1e-9);
}

TEST_CASE("distance matrix analytic and metric properties") {
  CHECK(distanceMatrix(NumArray::fromRows({{0, 0}, {3, 4}}), DistanceStrategy::FullBroadcast) ==
        NumArray::fromRows({{0, 5}, {5, 0}}));
  for (auto s : {DistanceStrategy::Loop3, DistanceStrategy::RowBroadcast, DistanceStrategy::FullBroadcast})
    CHECK(distanceMatrix(NumArray::row({1, 2, 3}), s) == NumArray::scalar(0));
  oracle::Gen g(14);
  const NumArray p = g.matrix(30, 4);
  const NumArray d = distanceMatrix(p, DistanceStrategy::RowBroadcast);
  for (int t = 0; t < 500; ++t) {
    const Index i = g.integer(0, 29), j = g.integer(0, 29), k = g.integer(0, 29);
    CHECK(d(i, k) <= d(i, j) + d(j, k) + 1e-9);
  }
}

TEST_CASE("metric handles") {
  const NumArray a = NumArray::row({0, 0}), b = NumArray::row({3, 4});
  CHECK(metricEuclidean()(a, b).item() == 5);
  CHECK(metricManhattan()(a, b).item() == 7);
  oracle::Gen g(15);
  const NumArray x = g.matrix(6, 3), y = g.matrix(4, 3);
  const NumArray de = metricEuclidean()(x, y), dm = metricManhattan()(x, y);
  CHECK(de.shape() == Shape{6, 4});
  CHECK(all(dm >= de));
  CHECK(all(de >= 0.0));
  CHECK(normInf(de - transpose(metricEuclidean()(y, x))) <= 1e-12);
  CHECK(normInf(dm - transpose(metricManhattan()(y, x))) <= 1e-12);
  const NumArray self = metricEuclidean()(x, x);
  for (Index i = 0; i < 6; ++i) CHECK(self(i, i) == 0);
}

TEST_CASE("pca of axis-aligned centered data orders axes by variance") {
  const NumArray x = NumArray::fromRows({{3, -3, 3, -3}, {1, 1, -1, -1}});
  const PcaResult r = pca(x);
  CHECK(normInf(abs(r.projected) - abs(NumArray::fromRows({{1, 1, -1, -1}, {3, -3, 3, -3}}))) <= 1e-12);
  oracle::Gen g(16);
  const NumArray z = g.matrix(4, 50);
  const PcaResult rz = pca(z);
  const NumArray cy = covarianceOfRows(rz.projected);
  double trS = 0, trY = 0;
  for (Index i = 0; i < 4; ++i) {
    trS += rz.covariance(i, i);
    trY += cy(i, i);
  }
  CHECK(std::fabs(trS - trY) <= 1e-9);
}

TEST_CASE("blockproc and dct2d basics") {
  oracle::Gen g(17);
  const NumArray a = g.matrix(16, 24);
  CHECK(blockproc(a, 8, 8, [](const NumArray& b) { return b; }) == a);
  const NumArray c = dct2d(ones(8, 8));
  CHECK(std::fabs(c(0, 0) - 8.0) <= 1e-12);
  CHECK(countTrue(abs(c) > 1e-12) == 1);
  CHECK(dct2d(zeros(8, 8)) == zeros(8, 8));
  CHECK(replaceNegNan(NumArray::row({0, 1.5, 2})) == NumArray::row({0, 1.5, 2}));
}
