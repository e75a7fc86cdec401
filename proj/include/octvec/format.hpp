#pragma once

#include <string>

#include "octvec/array.hpp"

namespace octvec {

/// Text of Octave's `disp` for a numeric array, one line per row, each line
/// newline-terminated. Integer-valued matrices use a common right-aligned
/// field of (sign slot + widest magnitude) plus two separating spaces;
/// `disp(magic(4))` reproduces Octave's layout byte for byte. Other values
/// get five significant digits in a shared fixed or scientific format.
std::string disp(const NumArray& a);

/// Logical arrays print as 0/1 in three-character columns.
std::string disp(const BoolMask& m);

/// Octave's short rendering of a single value: `34`, `0.7071`, `2.2204e-16`.
std::string formatScalar(double v);

}  // namespace octvec
