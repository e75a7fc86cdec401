// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "octvec/cli.hpp"
#include "octvec/octvec.hpp"
#include "support/oracles.hpp"

using namespace octvec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      if (!detail.empty()) detail += "; ";
      detail += what;
      pass = false;
    }
  }
};

double maxAbsDiff(const NumArray& a, const NumArray& b) {
  double worst = 0.0;
  for (Index i = 0; i < a.numel(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
  return worst;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string readFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

Outcome goldenTranscripts() {
  Outcome o;
  const NumArray m = magic(4);
  o.require(disp(m) == "   16    2    3   13\n    5   11   10    8\n    9    7    6   12\n    4   14   15    1\n",
            "magic(4)");
  o.require(demoIndexTranscript() == readFile(OCTVEC_GOLDEN_DIR "/demo_index.txt"), "index transcript");
  o.require(demoReplaceTranscript() == readFile(OCTVEC_GOLDEN_DIR "/demo_replace.txt"), "replace transcript");
  o.require(disp(transpose(logicalExtract(m, m < 8.0))) == "   5   4   2   7   3   6   1\n", "M(M<8)'");
  const NumArray x = NumArray::fromRows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  o.require(disp(x + NumArray::row({10, 20, 30})) == "   11   22   33\n   14   25   36\n   17   28   39\n",
            "broadcast table");
  const std::string linear = "   16    5    9    4    2   11    7   14    3   10    6   15   13    8   12    1\n";
  const std::string bous = "   16    5    9    4   14    7   11    2    3   10    6   15    1   12    8   13\n";
  for (Variant v : {Variant::Loop, Variant::Vectorized}) {
    o.require(disp(linearScan(m, v).sequence) == linear, "linear scan");
    o.require(disp(boustrophedonScan(m, v).sequence) == bous, "boustrophedon scan");
  }
  if (o.pass) o.detail = "magic, index, logical, NaN, broadcast, replace and scan outputs byte-identical";
  return o;
}

Outcome zigzag() {
  Outcome o;
  o.require(oracle::values(zigzagScan(magic(4), Variant::Loop).sequence) == oracle::kZigzagMagic4,
            "loop on magic(4) differs from trace");
  oracle::Gen g(2024);
  int mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    const NumArray a = g.integerMatrix(g.integer(1, 12), g.integer(1, 12), 1, 1000);
    if (!(zigzagScan(a, Variant::Loop).sequence == zigzagScan(a, Variant::Vectorized).sequence)) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " of 200 shapes differ between variants");
  if (o.pass) o.detail = "magic(4) trace reproduced; loop == vectorized on 200 random shapes";
  return o;
}

Outcome distances() {
  Outcome o;
  PrngStream rng(42);
  const NumArray p = rng.uniform(Shape{300, 5});
  const NumArray d1 = distanceMatrix(p, DistanceStrategy::Loop3);
  const NumArray d2 = distanceMatrix(p, DistanceStrategy::RowBroadcast);
  const NumArray d3 = distanceMatrix(p, DistanceStrategy::FullBroadcast);
  const double delta = std::max({maxAbsDiff(d1, d2), maxAbsDiff(d1, d3), maxAbsDiff(d2, d3)});
  o.require(delta <= 1e-9, "strategies differ by " + sci(delta));
  double asym = 0.0, diag = 0.0;
  for (const NumArray* d : {&d1, &d2, &d3}) {
    asym = std::max(asym, maxAbsDiff(*d, transpose(*d)));
    for (Index i = 0; i < 300; ++i) diag = std::max(diag, std::fabs((*d)(i, i)));
  }
  o.require(asym <= 1e-12, "asymmetry " + sci(asym));
  o.require(diag == 0.0, "nonzero diagonal " + sci(diag));
  if (o.pass) o.detail = "max |delta| " + sci(delta) + ", asymmetry " + sci(asym) + ", diagonal exactly 0";
  return o;
}

Outcome principalComponents() {
  Outcome o;
  PrngStream rng(42);
  const double theta = std::numbers::pi / 4;
  const NumArray r = NumArray::fromRows({{std::cos(theta), -std::sin(theta)}, {std::sin(theta), std::cos(theta)}});
  const NumArray x = matmul(r, rng.normal(Shape{2, 100}) * NumArray::column({1.0, 0.1}));
  const PcaResult res = pca(x);
  const NumArray cy = covarianceOfRows(res.projected);
  const double trS = res.covariance(0, 0) + res.covariance(1, 1);
  const double trY = cy(0, 0) + cy(1, 1);
  const double ortho = normInf(matmul(transpose(res.components), res.components) - identity(2));
  const double off = std::fabs(cy(0, 1));
  const double ratio = std::max(cy(0, 0), cy(1, 1)) / std::min(cy(0, 0), cy(1, 1));
  o.require(ortho <= 1e-9, "P'P - I = " + sci(ortho));
  o.require(off <= 1e-9 * trS, "off-diagonal " + sci(off));
  o.require(std::fabs(trS - trY) <= 1e-9, "trace drift " + sci(std::fabs(trS - trY)));
  o.require(ratio >= 50.0, "variance ratio " + sci(ratio));
  if (o.pass)
    o.detail = "P'P-I " + sci(ortho) + ", off-diag/trace " + sci(off / trS) + ", variance ratio " + sci(ratio);
  return o;
}

Outcome linearAlgebra() {
  Outcome o;
  oracle::Gen g(77);
  double worstEig = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Index n = g.integer(1, 12);
    const NumArray s = g.symmetric(n);
    const EigResult e = eigSym(s);
    const double res = normInf(matmul(s, e.vectors) - e.vectors * transpose(e.values)) / normInf(s);
    worstEig = std::max(worstEig, res);
  }
  o.require(worstEig <= 1e-9, "eigSym relative residual " + sci(worstEig));

  const NumArray a = g.wellConditioned(50);
  const NumArray b = g.matrix(50, 1);
  const NumArray xs = mldivide(a, b);
  const double lu = normInf(matmul(a, xs) - b) / (normInf(a) * normInf(xs));
  o.require(lu <= 1e-12, "mldivide relative residual " + sci(lu));

  double ortho = 0.0;
  for (Index n : {2, 4, 8, 16, 32}) ortho = std::max(ortho, normInf(matmul(dctmtx(n), transpose(dctmtx(n))) - identity(n)));
  o.require(ortho <= 1e-12, "dctmtx orthonormality " + sci(ortho));

  const NumArray img = g.matrix(40, 24, 0, 255);
  const NumArray blk = extract(img, {idx::range(1, 8), idx::range(1, 8)});
  const double rt2d = normInf(idct2d(dct2d(blk)) - blk);
  const double rtBlock = normInf(blockproc(blockproc(img, 8, 8, dct2dHandle(8)), 8, 8, idct2dHandle(8)) - img);
  o.require(rt2d <= 1e-9, "dct2d round trip " + sci(rt2d));
  o.require(rtBlock <= 1e-9, "blockproc round trip " + sci(rtBlock));
  if (o.pass)
    o.detail = "eig " + sci(worstEig) + ", lu " + sci(lu) + ", dctmtx " + sci(ortho) + ", round trips " +
               sci(std::max(rt2d, rtBlock));
  return o;
}

Outcome floatingPoint() {
  Outcome o;
  volatile double tenth = 0.1, fifth = 0.2, threeTenths = 0.3;
  o.require(!(tenth + fifth == threeTenths), "0.1+0.2 == 0.3");
  o.require(std::fabs(tenth + fifth - threeTenths) > 0.0, "|delta| is zero");
  volatile double a = 0.7777777777777, b = 7, c = 0.1111111111111;
  o.require(!(a / b == c), "0.7777777777777/7 == 0.1111111111111");
  o.require(kEps == std::ldexp(1.0, -52), "eps != 2^-52");
  o.require(formatScalar(kEps) == "2.2204e-16", "eps renders as " + formatScalar(kEps));
  if (o.pass) o.detail = "0.1+0.2 != 0.3, division mismatch, eps = 2.2204e-16";
  return o;
}

Outcome bitExactVectorization() {
  Outcome o;
  PrngStream rng(42);
  const NumArray u = rng.uniform(Shape{1'000'000, 1});
  const NumArray v = rng.uniform(Shape{1'000'000, 1});
  double loopSum = 0.0;
  for (Index i = 0; i < u.numel(); ++i) loopSum += u[i];
  o.require(sumAll(u) == loopSum && sum(u).item() == loopSum, "sum");
  double loopDot = 0.0;
  for (Index i = 0; i < u.numel(); ++i) loopDot += u[i] * v[i];
  o.require(dot(u, v) == loopDot, "dot");
  const NumArray r = rng.randint(1, 100, Shape{1, 1'000'000});
  double s = 0.0;
  Index count = 0;
  for (Index i = 0; i < r.numel(); ++i)
    if (r[i] > 50) {
      s += r[i];
      ++count;
    }
  o.require(mean(logicalExtract(r, r > 50.0)).item() == s / static_cast<double>(count), "mean-above-50");
  if (o.pass) o.detail = "sum, dot and mean(r(r>50)) bit-identical to scalar loops on 1e6 elements";
  return o;
}

Outcome grayscale() {
  Outcome o;
  o.require(rgb2gray(NumArray(Shape{1, 1, 3}, 100.0)).item() == 100.0, "(100,100,100) is not 100");
  NumArray red(Shape{1, 1, 3});
  red[0] = 255;
  const double g = rgb2gray(red).item();
  o.require(std::fabs(g - 76.245) <= 1e-12, "(255,0,0) gives " + sci(g));
  PrngStream rng(42);
  const NumArray img = rng.randint(0, 255, Shape{64, 64, 3});
  o.require(rgb2gray(img, Variant::Loop) == rgb2gray(img, Variant::Vectorized), "loop != broadcast");
  if (o.pass) o.detail = "uniform 100 exact, red 76.245, broadcast == per-pixel loop on 64x64x3";
  return o;
}

Outcome benchHarness() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<TimingRecord>> runs;
  for (int pass = 0; pass < 2; ++pass) {
    std::ostringstream out, err;
    const int code = runCli({"bench", "run", "--scenario", "all", "--seed", "42"}, out, err);
    o.require(code == 0, "bench exited " + std::to_string(code) + ": " + err.str());
    try {
      runs.push_back(parseCsv(out.str()));
    } catch (const Error& e) {
      o.require(false, std::string("malformed csv: ") + e.what());
      return o;
    }
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto names = builtinScenarioNames();
  for (const auto& recs : runs) {
    for (const auto& name : names)
      o.require(std::count_if(recs.begin(), recs.end(), [&](const TimingRecord& r) { return r.scenario == name; }) >= 2,
                "scenario " + name + " missing");
    for (const auto& r : recs) {
      o.require(r.totalSeconds > 0.0 && r.secondsPerRep > 0.0, r.scenario + "/" + r.variant + " non-positive time");
      o.require(r.reps >= 1, r.scenario + "/" + r.variant + " reps");
    }
  }
  o.require(runs.size() == 2 && runs[0].size() == runs[1].size(), "record counts differ between runs");
  if (o.pass)
    for (std::size_t i = 0; i < runs[0].size(); ++i)
      o.require(runs[0][i].checksum == runs[1][i].checksum, runs[0][i].scenario + " checksum not seed-stable");
  o.require(elapsed < 30.0, "took " + sci(elapsed) + " s");
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu records per run, all verified, checksums stable, %.2f s for two runs",
                  runs[0].size(), elapsed);
    o.detail = buf;
  }
  return o;
}

Outcome scanPermutation() {
  Outcome o;
  oracle::Gen g(99);
  using ScanFn = ScanResult (*)(const NumArray&, Variant);
  const std::pair<const char*, ScanFn> scans[] = {
      {"linear", &linearScan}, {"boustrophedon", &boustrophedonScan}, {"zigzag", &zigzagScan}};
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const NumArray a = g.integerMatrix(g.integer(1, 15), g.integer(1, 15), -50, 50);
    auto expected = oracle::values(a);
    std::sort(expected.begin(), expected.end());
    for (const auto& [name, fn] : scans)
      for (Variant v : {Variant::Loop, Variant::Vectorized}) {
        auto got = oracle::values(fn(a, v).sequence);
        std::sort(got.begin(), got.end());
        o.require(got == expected, std::string(name) + " is not a permutation");
        ++checked;
      }
  }
  if (o.pass) o.detail = std::to_string(checked) + " scan outputs are permutations of their inputs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden transcripts", goldenTranscripts},
      {"zigzag trace and variant equality", zigzag},
      {"distance strategies", distances},
      {"pca on rotated cloud", principalComponents},
      {"linear algebra residuals", linearAlgebra},
      {"floating-point caveats", floatingPoint},
      {"loop/vectorized bit-exactness", bitExactVectorization},
      {"rgb2gray", grayscale},
      {"benchmark harness", benchHarness},
      {"scan multiset property", scanPermutation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
