#include "octvec/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

#include "octvec/core.hpp"
#include "octvec/elementwise.hpp"
#include "octvec/idioms.hpp"
#include "octvec/indexing.hpp"
#include "octvec/linalg.hpp"
#include "octvec/reduce.hpp"
#include "octvec/scans.hpp"

namespace octvec {

double PrngStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

double PrngStream::normal() {
  if (hasSpare_) {
    hasSpare_ = false;
    return spareNormal_;
  }
  // 1 - u lies in (0, 1], keeping log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spareNormal_ = radius * std::sin(angle);
  hasSpare_ = true;
  return radius * std::cos(angle);
}

Index PrngStream::randint(Index lo, Index hi) {
  if (lo > hi) throw ArgumentError("randint: lower bound " + std::to_string(lo) + " exceeds upper bound " + std::to_string(hi));
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return lo + static_cast<Index>(engine_());
  // Largest multiple of `range` representable; draws at or past it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<Index>(x % range);
}

NumArray PrngStream::uniform(const Shape& shape) {
  NumArray out(shape);
  for (Index i = 0; i < out.numel(); ++i) out[i] = uniform();
  return out;
}

NumArray PrngStream::normal(const Shape& shape) {
  NumArray out(shape);
  for (Index i = 0; i < out.numel(); ++i) out[i] = normal();
  return out;
}

NumArray PrngStream::randint(Index lo, Index hi, const Shape& shape) {
  if (lo > hi) throw ArgumentError("randint: lower bound " + std::to_string(lo) + " exceeds upper bound " + std::to_string(hi));
  NumArray out(shape);
  for (Index i = 0; i < out.numel(); ++i) out[i] = static_cast<double>(randint(lo, hi));
  return out;
}

Timing timeIt(const std::function<NumArray()>& f, Index reps) {
  if (reps < 1) throw ArgumentError("timeIt: reps must be at least 1");
  NumArray result = f();
  const auto start = std::chrono::steady_clock::now();
  for (Index r = 0; r < reps; ++r) result = f();
  const auto stop = std::chrono::steady_clock::now();
  return {std::chrono::duration<double>(stop - start).count(), sumAll(result)};
}

namespace {

double maxAbsDiff(const NumArray& a, const NumArray& b) {
  double worst = 0.0;
  for (Index i = 0; i < a.numel(); ++i) {
    const double x = a[i], y = b[i];
    if (std::isnan(x) || std::isnan(y)) {
      if (std::isnan(x) != std::isnan(y)) return INFINITY;
      continue;
    }
    if (x == y) continue;  // also covers equal infinities
    worst = std::max(worst, std::fabs(x - y));
  }
  return worst;
}

}  // namespace

std::vector<TimingRecord> runScenario(const BenchScenario& s) {
  if (s.variants.empty()) throw ArgumentError("scenario " + s.name + " has no variants");
  std::vector<NumArray> results;
  results.reserve(s.variants.size());
  for (const auto& v : s.variants) results.push_back(v.run());

  const NumArray& ref = results.front();
  const double refChecksum = sumAll(ref);
  for (std::size_t k = 1; k < results.size(); ++k) {
    const auto& name = s.variants[k].name;
    const auto& refName = s.variants.front().name;
    if (!(results[k].shape() == ref.shape())) {
      throw VerificationError(s.name + ": variant " + name + " returned " + results[k].shape().str() + ", " +
                              refName + " returned " + ref.shape().str());
    }
    const double delta = maxAbsDiff(results[k], ref);
    if (delta > s.tolerance) {
      throw VerificationError(s.name + ": variants " + refName + " and " + name + " differ, max |delta| = " +
                              formatCsvNumber(delta) + " (tolerance " + formatCsvNumber(s.tolerance) + ")");
    }
    const double checksum = sumAll(results[k]);
    if (std::fabs(checksum - refChecksum) > s.checksumTolerance * std::fabs(refChecksum)) {
      throw VerificationError(s.name + ": checksums of " + refName + " and " + name + " differ (" +
                              formatCsvNumber(refChecksum) + " vs " + formatCsvNumber(checksum) + ")");
    }
  }

  std::vector<TimingRecord> records;
  const Index n = s.sizeParams.empty() ? 0 : s.sizeParams.front();
  for (const auto& v : s.variants) {
    const Timing t = timeIt(v.run, s.reps);
    records.push_back({s.name, v.name, n, s.reps, t.totalSeconds, t.totalSeconds / static_cast<double>(s.reps), t.checksum});
  }
  return records;
}

std::string formatCsvNumber(double v) {
  char buf[48];
  if (v != 0.0 && std::fabs(v) < 1e-3) {
    std::snprintf(buf, sizeof buf, "%.5e", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.6g", v);
  }
  return buf;
}

namespace {

constexpr std::string_view kCsvHeader = "scenario,variant,n,reps,total_seconds,seconds_per_rep,checksum";

std::vector<std::string> splitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parseNumber(const std::string& s, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw FormatError("csv line " + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

}  // namespace

std::string emitCsv(const std::vector<TimingRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += r.scenario + ',' + r.variant + ',' + std::to_string(r.n) + ',' + std::to_string(r.reps) + ',' +
           formatCsvNumber(r.totalSeconds) + ',' + formatCsvNumber(r.secondsPerRep) + ',' +
           formatCsvNumber(r.checksum) + '\n';
  }
  return out;
}

std::vector<TimingRecord> parseCsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw FormatError("csv: missing or unexpected header");
  std::vector<TimingRecord> records;
  std::size_t lineNo = 1;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty()) continue;
    const auto f = splitFields(line);
    if (f.size() != 7) throw FormatError("csv line " + std::to_string(lineNo) + ": expected 7 fields, got " + std::to_string(f.size()));
    records.push_back({f[0], f[1], static_cast<Index>(parseNumber(f[2], lineNo)), static_cast<Index>(parseNumber(f[3], lineNo)),
                       parseNumber(f[4], lineNo), parseNumber(f[5], lineNo), parseNumber(f[6], lineNo)});
  }
  return records;
}

namespace {

Index scaledReps(Index base, const BenchConfig& c) {
  return std::max<Index>(1, static_cast<Index>(std::lround(static_cast<double>(base) * c.repScale)));
}

BenchScenario vectorAdd(const BenchConfig& c) {
  constexpr Index n = 1'000'000;
  auto x = std::make_shared<const NumArray>(colonRange(1.0, static_cast<double>(n)));
  BenchScenario s{"vector-add", {n}, {}, scaledReps(20, c), 0.0, 0.0};
  s.variants.push_back({"loop", [x] {
                          NumArray out(x->shape());
                          for (Index i = 0; i < x->numel(); ++i) out[i] = (*x)[i] + (*x)[i];
                          return out;
                        }});
  s.variants.push_back({"vectorized", [x] { return *x + *x; }});
  return s;
}

BenchScenario dotProduct(const BenchConfig& c) {
  constexpr Index n = 1'000'000;
  PrngStream rng(c.seed);
  auto a = std::make_shared<const NumArray>(rng.uniform(Shape{n, 1}));
  auto b = std::make_shared<const NumArray>(rng.uniform(Shape{n, 1}));
  BenchScenario s{"dot-product", {n}, {}, scaledReps(20, c), 0.0, 0.0};
  s.variants.push_back({"loop", [a, b] {
                          double r = 0.0;
                          for (Index i = 0; i < a->numel(); ++i) r += (*a)[i] * (*b)[i];
                          return NumArray::scalar(r);
                        }});
  s.variants.push_back({"vectorized", [a, b] { return NumArray::scalar(dot(*a, *b)); }});
  return s;
}

BenchScenario meanAbove50(const BenchConfig& c) {
  constexpr Index n = 1'000'000;
  PrngStream rng(c.seed);
  auto r = std::make_shared<const NumArray>(rng.randint(1, 100, Shape{1, n}));
  BenchScenario s{"mean-above-50", {n}, {}, scaledReps(20, c), 0.0, 0.0};
  s.variants.push_back({"loop", [r] {
                          double sum = 0.0;
                          Index count = 0;
                          for (Index i = 0; i < r->numel(); ++i) {
                            if ((*r)[i] > 50.0) {
                              sum += (*r)[i];
                              ++count;
                            }
                          }
                          return NumArray::scalar(sum / static_cast<double>(count));
                        }});
  s.variants.push_back({"logical-index", [r] { return mean(logicalExtract(*r, *r > 50.0)); }});
  return s;
}

template <ScanResult (*Scan)(const NumArray&, Variant)>
BenchScenario scanScenario(const char* name, const BenchConfig& c) {
  constexpr Index n = 512;
  PrngStream rng(c.seed);
  auto m = std::make_shared<const NumArray>(rng.randint(1, 1000, Shape{n, n}));
  BenchScenario s{name, {n}, {}, scaledReps(5, c), 0.0, 0.0};
  s.variants.push_back({"loop", [m] { return Scan(*m, Variant::Loop).sequence; }});
  s.variants.push_back({"vectorized", [m] { return Scan(*m, Variant::Vectorized).sequence; }});
  return s;
}

BenchScenario distance(const BenchConfig& c) {
  constexpr Index n = 300;
  constexpr Index dims = 5;
  PrngStream rng(c.seed);
  auto p = std::make_shared<const NumArray>(rng.uniform(Shape{n, dims}));
  BenchScenario s{"distance", {n, dims}, {}, scaledReps(1, c), 1e-9, 1e-6};
  s.variants.push_back({"loop3", [p] { return distanceMatrix(*p, DistanceStrategy::Loop3); }});
  s.variants.push_back({"row-broadcast", [p] { return distanceMatrix(*p, DistanceStrategy::RowBroadcast); }});
  s.variants.push_back({"full-broadcast", [p] { return distanceMatrix(*p, DistanceStrategy::FullBroadcast); }});
  return s;
}

BenchScenario grayscale(const BenchConfig& c) {
  constexpr Index n = 256;
  PrngStream rng(c.seed);
  auto img = std::make_shared<const NumArray>(rng.randint(0, 255, Shape{n, n, 3}));
  BenchScenario s{"grayscale", {n}, {}, scaledReps(10, c), 0.0, 0.0};
  s.variants.push_back({"loop", [img] { return rgb2gray(*img, Variant::Loop); }});
  s.variants.push_back({"broadcast", [img] { return rgb2gray(*img, Variant::Vectorized); }});
  return s;
}

}  // namespace

std::vector<std::string> builtinScenarioNames() {
  return {"vector-add", "dot-product", "mean-above-50", "boustrophedon", "zigzag", "distance", "grayscale"};
}

BenchScenario builtinScenario(std::string_view name, const BenchConfig& config) {
  if (name == "vector-add") return vectorAdd(config);
  if (name == "dot-product") return dotProduct(config);
  if (name == "mean-above-50") return meanAbove50(config);
  if (name == "boustrophedon") return scanScenario<&boustrophedonScan>("boustrophedon", config);
  if (name == "zigzag") return scanScenario<&zigzagScan>("zigzag", config);
  if (name == "distance") return distance(config);
  if (name == "grayscale") return grayscale(config);
  throw ArgumentError("unknown scenario '" + std::string(name) + "'");
}

std::vector<BenchScenario> builtinScenarios(const BenchConfig& config) {
  std::vector<BenchScenario> out;
  for (const auto& n : builtinScenarioNames()) out.push_back(builtinScenario(n, config));
  return out;
}

}  // namespace octvec
