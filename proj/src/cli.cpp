#include "octvec/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "octvec/bench.hpp"
#include "octvec/core.hpp"
#include "octvec/elementwise.hpp"
#include "octvec/format.hpp"
#include "octvec/idioms.hpp"
#include "octvec/image.hpp"
#include "octvec/indexing.hpp"
#include "octvec/linalg.hpp"
#include "octvec/reduce.hpp"
#include "octvec/scans.hpp"

namespace octvec {

namespace {

std::string prompt(const std::string& command) { return ">> " + command + "\n"; }

std::string shortest(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string matrixCsv(const NumArray& a) {
  std::string out;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += shortest(a(i, j));
    }
    out += '\n';
  }
  return out;
}

void writeText(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot write " + path);
  f << text;
  if (!f) throw FormatError("write failed for " + path);
}

NumArray scanInput(Index size, const std::string& matrix) {
  if (matrix == "magic") return magic(size);
  return reshape(colonRange(1.0, static_cast<double>(size * size)), Shape{size, size});
}

std::string demoScan(const std::string& kind, Index size, const std::string& variantName, const std::string& matrix) {
  const NumArray m = scanInput(size, matrix);
  const Variant variant = variantName == "loop" ? Variant::Loop : Variant::Vectorized;
  ScanResult r;
  if (kind == "linear") {
    r = linearScan(m, variant);
  } else if (kind == "boustrophedon") {
    r = boustrophedonScan(m, variant);
  } else {
    r = zigzagScan(m, variant);
  }
  return disp(r.sequence);
}

std::string demoPca(Index n, std::uint64_t seed) {
  PrngStream rng(seed);
  const double theta = std::numbers::pi / 4;
  const NumArray rotation = NumArray::fromRows({{std::cos(theta), -std::sin(theta)}, {std::sin(theta), std::cos(theta)}});
  const NumArray x = matmul(rotation, rng.normal(Shape{2, n}) * NumArray::column({1.0, 0.1}));
  const PcaResult r = pca(x);
  const NumArray covY = covarianceOfRows(r.projected);
  const double traceS = r.covariance(0, 0) + r.covariance(1, 1);
  const double traceY = covY(0, 0) + covY(1, 1);
  const double hi = std::max(covY(0, 0), covY(1, 1));
  const double lo = std::min(covY(0, 0), covY(1, 1));

  std::ostringstream out;
  out << "samples: " << n << "  seed: " << seed << "\n";
  out << "covariance of X:\n" << disp(r.covariance);
  out << "principal directions P (columns, ascending variance):\n" << disp(r.components);
  out << "covariance of Y = P'*X:\n" << disp(covY);
  out << "trace(S): " << formatScalar(traceS) << "  trace(cov(Y)): " << formatScalar(traceY) << "\n";
  out << "off-diagonal / trace: " << formatScalar(std::fabs(covY(0, 1)) / traceS) << "\n";
  out << "variance ratio leading/minor: " << formatScalar(hi / lo) << "\n";
  return out.str();
}

int runBench(const std::string& scenario, std::uint64_t seed, double repScale, const std::string& outPath,
             std::ostream& out) {
  BenchConfig config{seed, repScale};
  std::vector<TimingRecord> records;
  const std::vector<std::string> names =
      scenario == "all" ? builtinScenarioNames() : std::vector<std::string>{scenario};
  for (const auto& name : names) {
    const auto r = runScenario(builtinScenario(name, config));
    records.insert(records.end(), r.begin(), r.end());
  }
  const std::string csv = emitCsv(records);
  if (outPath.empty()) {
    out << csv;
  } else {
    writeText(outPath, csv);
  }
  return kExitOk;
}

int imgGray(const std::string& in, const std::string& outPath) {
  const Image src = readPnm(in);
  if (src.channels() != 3) throw ShapeError("img gray: " + in + " is not a color image");
  writePnm(Image(rgb2gray(src.pixels())), outPath);
  return kExitOk;
}

int imgDct(const std::string& in, Index block, const std::string& outPath, std::ostream& out) {
  Image src = readPnm(in);
  if (src.channels() == 3) src = Image(rgb2gray(src.pixels()));
  const std::string csv = matrixCsv(abs(dctPipeline(src, block)));
  if (outPath.empty()) {
    out << csv;
  } else {
    writeText(outPath, csv);
  }
  return kExitOk;
}

}  // namespace

std::string demoIndexTranscript() {
  const NumArray m = magic(4);
  std::string t;
  t += prompt("M = magic (4);");
  t += prompt("disp (M)") + disp(m);
  t += prompt("disp (M(3:7))") + disp(extract(m, IndexExpr::linear(idx::range(3, 7))));
  t += prompt("disp (M(12:end))") + disp(extract(m, IndexExpr::linear(idx::range(12, idx::end))));
  t += prompt("disp (M([1,3,5]))") + disp(extract(m, IndexExpr::linear(idx::list({1, 3, 5}))));
  t += prompt("disp (M(1:2,2:3))") + disp(extract(m, {idx::range(1, 2), idx::range(2, 3)}));
  t += prompt("disp (M(end,end-1:end))") + disp(extract(m, {idx::end, idx::range(idx::end - 1, idx::end)}));
  t += prompt("disp (M(3,:))") + disp(extract(m, {3, idx::all}));
  t += prompt("disp (M < 8)") + disp(m < 8.0);
  t += prompt("disp (M(M < 8)')") + disp(transpose(logicalExtract(m, m < 8.0)));
  NumArray withNan = assignIndexed(m, {1, 1}, 0.0 / 0.0);
  t += prompt("M(1,1) = 0/0;");
  t += prompt("disp (isnan (M))") + disp(isnan(withNan));
  t += prompt("M(isnan (M))=0;");
  withNan = logicalAssign(withNan, isnan(withNan), 0.0);
  t += prompt("disp (M)") + disp(withNan);
  return t;
}

std::string demoReplaceTranscript() {
  std::string t;
  t += prompt("replace_negative = @(x) (x < 0) .* 0 + (x >= 0) .* x;");
  t += prompt("disp (replace_negative ([-1 1 -2 2 -3 3]));") +
       disp(replaceNegative(NumArray::row({-1, 1, -2, 2, -3, 3})));
  t += prompt("replace_neg_nan = @(x) ifelse(isnan(x) | x < 0, 0, x);");
  t += prompt("disp (replace_neg_nan ([0 1 2 -1 NaN 3 -2 4]));") +
       disp(replaceNegNan(NumArray::row({0, 1, 2, -1, NAN, 3, -2, 4})));
  return t;
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Octave-style array kernels, vectorization case studies and benchmarks", "octvec"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::uint64_t seed = 42;
  app.add_option("--seed", seed, "Seed for every random input")->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Print the worked examples");
  demo->require_subcommand(1, 1);
  auto* demoIndex = demo->add_subcommand("index", "Index expressions and logical indexing on magic(4)");
  auto* demoScanCmd = demo->add_subcommand("scan", "Scan a matrix in linear, boustrophedon or zigzag order");
  std::string kind = "linear";
  Index size = 4;
  std::string variant = "vec";
  std::string matrix = "magic";
  demoScanCmd->add_option("--kind", kind)->check(CLI::IsMember({"linear", "boustrophedon", "zigzag"}))->capture_default_str();
  demoScanCmd->add_option("--size", size, "Matrix order")->check(CLI::PositiveNumber)->capture_default_str();
  demoScanCmd->add_option("--variant", variant)->check(CLI::IsMember({"loop", "vec"}))->capture_default_str();
  demoScanCmd->add_option("--matrix", matrix, "magic(size) or reshape(1:size^2, size, size)")
      ->check(CLI::IsMember({"magic", "ramp"}))
      ->capture_default_str();
  auto* demoPcaCmd = demo->add_subcommand("pca", "PCA of a rotated anisotropic Gaussian cloud");
  Index samples = 100;
  demoPcaCmd->add_option("--n", samples, "Number of samples")->check(CLI::Range(Index{2}, Index{10'000'000}))->capture_default_str();
  auto* demoReplace = demo->add_subcommand("replace", "Replace negative values and NaN with zero");

  auto* bench = app.add_subcommand("bench", "Loop versus vectorized timings");
  bench->require_subcommand(1, 1);
  auto* benchRun = bench->add_subcommand("run", "Verify and time scenarios, CSV output");
  std::string scenario = "all";
  std::string benchOut;
  double repScale = 1.0;
  std::vector<std::string> scenarioChoices = builtinScenarioNames();
  scenarioChoices.push_back("all");
  benchRun->add_option("--scenario", scenario)->check(CLI::IsMember(scenarioChoices))->capture_default_str();
  benchRun->add_option("--out", benchOut, "Write CSV here instead of stdout");
  benchRun->add_option("--rep-scale", repScale, "Multiplier on each scenario's rep count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* img = app.add_subcommand("img", "Image pipeline on PNM files");
  img->require_subcommand(1, 1);
  auto* imgGrayCmd = img->add_subcommand("gray", "RGB (P3/P6) to grayscale (P5)");
  std::string inPath, outPath;
  imgGrayCmd->add_option("--in", inPath)->required();
  imgGrayCmd->add_option("--out", outPath)->required();
  auto* imgDctCmd = img->add_subcommand("dct", "Block DCT coefficient magnitudes as CSV");
  Index block = 8;
  imgDctCmd->add_option("--in", inPath)->required();
  imgDctCmd->add_option("--block", block)->check(CLI::PositiveNumber)->capture_default_str();
  imgDctCmd->add_option("--out", outPath, "Write CSV here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (*demoIndex) {
      out << demoIndexTranscript();
    } else if (*demoScanCmd) {
      if (matrix == "magic" && size % 4 != 0) {
        err << "demo scan: magic squares need an order divisible by 4; use --matrix ramp for other sizes\n";
        return kExitUsage;
      }
      out << demoScan(kind, size, variant, matrix);
    } else if (*demoPcaCmd) {
      out << demoPca(samples, seed);
    } else if (*demoReplace) {
      out << demoReplaceTranscript();
    } else if (*benchRun) {
      return runBench(scenario, seed, repScale, benchOut, out);
    } else if (*imgGrayCmd) {
      return imgGray(inPath, outPath);
    } else if (*imgDctCmd) {
      return imgDct(inPath, block, outPath, out);
    }
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace octvec
