#include "octvec/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace octvec {

namespace {

constexpr int kPrecision = 5;

int integerDigits(double v) {
  const double a = std::fabs(v);
  return a < 1.0 ? 1 : static_cast<int>(std::floor(std::log10(a))) + 1;
}

bool allIntegers(const NumArray& a) {
  for (double v : a.values())
    if (std::isfinite(v) && v != std::round(v)) return false;
  return true;
}

std::string renderNonFinite(double v) {
  if (std::isnan(v)) return "NaN";
  return v > 0 ? "Inf" : "-Inf";
}

struct Format {
  int width = 0;            // field width excluding the two-space separator
  bool integer = true;
  bool scientific = false;
  int decimals = 0;

  std::string render(double v) const {
    char buf[64];
    if (v == 0.0) v = 0.0;  // no "-0"
    if (!std::isfinite(v)) {
      std::snprintf(buf, sizeof buf, "%*s", width, renderNonFinite(v).c_str());
    } else if (integer) {
      std::snprintf(buf, sizeof buf, "%*.0f", width, v);
    } else if (scientific) {
      std::snprintf(buf, sizeof buf, "%*.*e", width, decimals, v);
    } else {
      std::snprintf(buf, sizeof buf, "%*.*f", width, decimals, v);
    }
    return buf;
  }
};

Format chooseFormat(const NumArray& a) {
  Format f;
  double maxAbs = 0.0;
  double minAbs = INFINITY;
  bool anyNonFinite = false;
  for (double v : a.values()) {
    if (!std::isfinite(v)) {
      anyNonFinite = true;
      continue;
    }
    maxAbs = std::max(maxAbs, std::fabs(v));
    if (v != 0.0) minAbs = std::min(minAbs, std::fabs(v));
  }
  if (allIntegers(a)) {
    f.width = 1 + integerDigits(maxAbs);
  } else {
    f.integer = false;
    const int ld = integerDigits(maxAbs);
    if (maxAbs >= 1e5 || (minAbs < 1e-5)) {
      f.scientific = true;
      f.decimals = kPrecision - 1;
      f.width = 1 + 1 + 1 + f.decimals + 4;
    } else {
      f.decimals = std::max(kPrecision - ld, 1);
      f.width = 1 + ld + 1 + f.decimals;
    }
  }
  if (anyNonFinite) f.width = std::max(f.width, 4);
  return f;
}

std::string renderPage(const NumArray& a, Index page, const Format& f) {
  std::string out;
  const Index m = a.rows(), n = a.cols();
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      out += "  ";
      out += f.render(a[i + m * (j + n * page)]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string disp(const NumArray& a) {
  if (a.isEmpty()) return "";
  const Format f = chooseFormat(a);
  const Index pages = a.numel() / (a.rows() * a.cols());
  if (pages == 1) return renderPage(a, 0, f);
  std::string out;
  for (Index p = 0; p < pages; ++p) {
    // Pages are labelled by their linear page number; enough for rank 3.
    out += "ans(:,:," + std::to_string(p + 1) + ") =\n\n" + renderPage(a, p, f) + "\n";
  }
  return out;
}

std::string disp(const BoolMask& m) {
  if (m.isEmpty()) return "";
  NumArray asNumbers(m.shape());
  for (Index i = 0; i < m.numel(); ++i) asNumbers[i] = m[i] ? 1.0 : 0.0;
  Format f;
  f.width = 1;
  const Index pages = m.numel() / (m.rows() * m.cols());
  std::string out;
  for (Index p = 0; p < pages; ++p) out += renderPage(asNumbers, p, f);
  return out;
}

std::string formatScalar(double v) {
  if (!std::isfinite(v)) return renderNonFinite(v);
  char buf[64];
  if (v == std::round(v) && std::fabs(v) < 1e10) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
  } else if (std::fabs(v) >= 1e-5 && std::fabs(v) < 1e5) {
    std::snprintf(buf, sizeof buf, "%.*f", std::max(kPrecision - integerDigits(v), 1), v);
  } else {
    std::snprintf(buf, sizeof buf, "%.*e", kPrecision - 1, v);
  }
  return buf;
}

}  // namespace octvec
