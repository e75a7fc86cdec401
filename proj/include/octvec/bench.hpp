#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "octvec/array.hpp"

namespace octvec {

/// Seeded random source for benchmark inputs.
///
/// The engine is std::mt19937_64, whose output sequence the C++ standard
/// pins down exactly. The distributions are written out here rather than
/// taken from <random>, whose algorithms vary between standard libraries:
///   uniform  (x >> 11) * 2^-53, in [0, 1)
///   normal   Box-Muller on two uniforms, both outputs used
///   randint  rejection sampling on the raw 64-bit draw, inclusive bounds
class PrngStream {
 public:
  explicit PrngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  double uniform();
  double normal();
  Index randint(Index lo, Index hi);

  NumArray uniform(const Shape& shape);
  NumArray normal(const Shape& shape);
  NumArray randint(Index lo, Index hi, const Shape& shape);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spareNormal_ = 0.0;
  bool hasSpare_ = false;
};

struct Timing {
  double totalSeconds = 0.0;
  /// Sum of the elements of the last result, consumed so the work stays.
  double checksum = 0.0;
};

/// One untimed warmup call, then `reps` timed calls on a steady clock.
Timing timeIt(const std::function<NumArray()>& f, Index reps);

struct BenchVariant {
  std::string name;
  std::function<NumArray()> run;
};

struct BenchScenario {
  std::string name;
  /// Problem size; the first entry is reported as `n`.
  std::vector<Index> sizeParams;
  std::vector<BenchVariant> variants;
  Index reps = 1;
  /// Max elementwise |difference| allowed between variants; 0 means exact.
  double tolerance = 0.0;
  /// Relative checksum agreement required between variants.
  double checksumTolerance = 0.0;
};

struct TimingRecord {
  std::string scenario;
  std::string variant;
  Index n = 0;
  Index reps = 0;
  double totalSeconds = 0.0;
  double secondsPerRep = 0.0;
  double checksum = 0.0;
};

/// Checks every variant against the first, then times each. Throws
/// VerificationError naming the variants and max |difference| when they
/// disagree; nothing is timed in that case.
std::vector<TimingRecord> runScenario(const BenchScenario& s);

/// Header `scenario,variant,n,reps,total_seconds,seconds_per_rep,checksum`
/// then one line per record.
std::string emitCsv(const std::vector<TimingRecord>& records);
std::vector<TimingRecord> parseCsv(std::string_view text);

/// Six significant digits; scientific below 1e-3 in magnitude.
std::string formatCsvNumber(double v);

struct BenchConfig {
  std::uint64_t seed = 42;
  /// Multiplies every scenario's default rep count (at least 1 rep).
  double repScale = 1.0;
};

/// vector-add, dot-product, mean-above-50, boustrophedon, zigzag, distance,
/// grayscale; inputs drawn from one stream per scenario seeded by `seed`.
std::vector<BenchScenario> builtinScenarios(const BenchConfig& config = {});
std::vector<std::string> builtinScenarioNames();
BenchScenario builtinScenario(std::string_view name, const BenchConfig& config = {});

}  // namespace octvec
