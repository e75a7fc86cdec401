#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "octvec/array.hpp"

namespace octvec {

/// Grayscale (h x w) or RGB (h x w x 3) pixels as doubles in [0, 255].
class Image {
 public:
  explicit Image(NumArray pixels);

  Index height() const { return pixels_.rows(); }
  Index width() const { return pixels_.cols(); }
  Index channels() const { return pixels_.rank() == 3 ? pixels_.dim(2) : 1; }
  const NumArray& pixels() const { return pixels_; }

 private:
  NumArray pixels_;
};

/// Netpbm P2/P3 (ASCII) and P5/P6 (binary), maxval 255 only, `#` comments
/// allowed in the header. Errors carry the byte offset of the problem.
Image decodePnm(std::string_view bytes);
/// P5 for one channel, P6 for three. Pixel values are rounded and clamped
/// to [0, 255].
std::string encodePnm(const Image& image);

Image readPnm(const std::filesystem::path& path);
void writePnm(const Image& image, const std::filesystem::path& path);

/// Block DCT coefficients of a grayscale image (`blockproc` with `dct2d`).
/// The result covers the image zero-padded to multiples of `block`.
NumArray dctPipeline(const Image& gray, Index block = 8);

}  // namespace octvec
