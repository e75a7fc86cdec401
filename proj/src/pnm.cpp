#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "octvec/idioms.hpp"
#include "octvec/image.hpp"

namespace octvec {

Image::Image(NumArray pixels) : pixels_(std::move(pixels)) {
  const bool gray = pixels_.rank() == 2;
  const bool rgb = pixels_.rank() == 3 && pixels_.dim(2) == 3;
  if (!gray && !rgb) throw ShapeError("image must be h x w or h x w x 3, got " + pixels_.shape().str());
  if (pixels_.rows() < 1 || pixels_.cols() < 1) throw ShapeError("image must have positive extents");
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("pnm: " + what + " at byte offset " + std::to_string(pos_));
  }

  void skipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long readInt(const char* what) {
    skipSpaceAndComments();
    if (pos_ >= bytes_.size()) fail(std::string("truncated, expected ") + what);
    long v = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > 1'000'000'000L) fail(std::string(what) + " too large");
      ++pos_;
      ++digits;
    }
    if (digits == 0) fail(std::string("expected ") + what);
    return v;
  }

  // Exactly one whitespace byte separates the header from binary payload.
  void consumeSingleSpace() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      fail("expected whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }
  unsigned char byteAt(std::size_t i) const { return static_cast<unsigned char>(bytes_[pos_ + i]); }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image decodePnm(std::string_view bytes) {
  HeaderReader in(bytes);
  if (bytes.size() < 2 || bytes[0] != 'P') in.fail("missing magic number");
  const char kind = bytes[1];
  if (kind != '2' && kind != '3' && kind != '5' && kind != '6') in.fail(std::string("unsupported format P") + kind);
  in.advance(2);
  const bool ascii = kind == '2' || kind == '3';
  const Index channels = kind == '3' || kind == '6' ? 3 : 1;

  const long width = in.readInt("width");
  const long height = in.readInt("height");
  if (width < 1 || height < 1) in.fail("image extents must be positive");
  const std::size_t maxvalAt = in.offset();
  const long maxval = in.readInt("maxval");
  if (maxval != 255) {
    throw FormatError("pnm: maxval " + std::to_string(maxval) + " unsupported (only 255) at byte offset " +
                      std::to_string(maxvalAt));
  }
  if (!ascii) in.consumeSingleSpace();

  const Index h = height, w = width;
  NumArray pixels(channels == 3 ? Shape{h, w, 3} : Shape{h, w});
  const std::size_t count = static_cast<std::size_t>(h * w * channels);
  if (!ascii && in.remaining() < count) {
    throw FormatError("pnm: truncated payload, need " + std::to_string(count) + " bytes, have " +
                      std::to_string(in.remaining()) + " at byte offset " + std::to_string(in.offset()));
  }
  // File order is row-major with interleaved channels.
  std::size_t k = 0;
  for (Index i = 0; i < h; ++i) {
    for (Index j = 0; j < w; ++j) {
      for (Index c = 0; c < channels; ++c, ++k) {
        double v;
        if (ascii) {
          const long s = in.readInt("sample");
          if (s > maxval) in.fail("sample " + std::to_string(s) + " exceeds maxval");
          v = static_cast<double>(s);
        } else {
          v = in.byteAt(k);
        }
        pixels[i + h * (j + w * c)] = v;
      }
    }
  }
  return Image(std::move(pixels));
}

std::string encodePnm(const Image& image) {
  const Index h = image.height(), w = image.width(), channels = image.channels();
  std::string out = (channels == 3 ? "P6\n" : "P5\n") + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  const NumArray& p = image.pixels();
  out.reserve(out.size() + static_cast<std::size_t>(h * w * channels));
  for (Index i = 0; i < h; ++i) {
    for (Index j = 0; j < w; ++j) {
      for (Index c = 0; c < channels; ++c) {
        const double v = p[i + h * (j + w * c)];
        const double clamped = std::isnan(v) ? 0.0 : std::clamp(std::round(v), 0.0, 255.0);
        out.push_back(static_cast<char>(static_cast<unsigned char>(clamped)));
      }
    }
  }
  return out;
}

Image readPnm(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("pnm: cannot open " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  return decodePnm(buf.str());
}

void writePnm(const Image& image, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError("pnm: cannot write " + path.string());
  const std::string bytes = encodePnm(image);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw FormatError("pnm: write failed for " + path.string());
}

NumArray dctPipeline(const Image& gray, Index block) {
  if (gray.channels() != 1) throw ShapeError("dctPipeline: expected a grayscale image");
  if (block < 1) throw ArgumentError("dctPipeline: block size must be at least 1");
  return blockproc(gray.pixels(), block, block, dct2dHandle(block));
}

}  // namespace octvec
