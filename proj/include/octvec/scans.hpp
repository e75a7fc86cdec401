#pragma once

#include "octvec/array.hpp"

namespace octvec {

/// Which of the two implementations of a case study to run.
enum class Variant { Loop, Vectorized };

/// Elements of a matrix listed in scan order.
struct ScanResult {
  /// 1 x numel.
  NumArray sequence;
};

/// Column by column, top to bottom. Vectorized form is `M(:)'`.
ScanResult linearScan(const NumArray& m, Variant variant);

/// Column by column with even-numbered columns read bottom-up. Vectorized
/// form flips `M(:, 2:2:end)` then flattens.
ScanResult boustrophedonScan(const NumArray& m, Variant variant);

/// Zigzag starting at the bottom-left element, walking constant
/// j - i diagonals: odd diagonals downwards, even ones upwards. The loop
/// form is a direction-flipping walker with boundary corrections; the
/// vectorized form extracts diagonals of an index matrix, flips every
/// second band column and drops the padding.
ScanResult zigzagScan(const NumArray& m, Variant variant);

}  // namespace octvec
