#pragma once

#include <cstdint>
#include <filesystem>
#include <variant>

#include "r2d2/bytes.hpp"

namespace r2d2::pixel {

// Row-major 8-bit RGB image. data holds width*height (r,g,b) triples.
struct RgbImage {
  int width = 0;
  int height = 0;
  Bytes data;

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

  std::uint8_t* at(int x, int y) {
    return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
  }
  const std::uint8_t* at(int x, int y) const {
    return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
  }

  bool operator==(const RgbImage&) const = default;
};

// Auto: width = smallest power of two >= ceil(sqrt(pixel_count)), which keeps
// the image near square and size-stratified. Fixed pins the width.
struct WidthPolicy {
  static WidthPolicy auto_width() { return WidthPolicy{0}; }
  static WidthPolicy fixed(int width) { return WidthPolicy{width}; }

  bool is_auto() const { return fixed_width == 0; }
  int fixed_width = 0;  // 0 = auto
};

// Consecutive byte triples become pixels in reading order; the tail and the
// final row are zero-padded (black).
RgbImage encode_bytes(ByteSpan bytes, WidthPolicy policy = WidthPolicy::auto_width());

// Inverse of encode_bytes, truncated to original_len.
Bytes decode_to_bytes(const RgbImage& image, std::size_t original_len);

// Nearest-neighbour: src = floor(dst * src_dim / dst_dim) per axis. Bilinear
// would blend unrelated code bytes, so it is deliberately not offered.
RgbImage resize_nearest(const RgbImage& image, int target_w, int target_h);

// 8-bit RGB, non-interlaced PNG. Reading anything else raises
// UnsupportedPngFormat.
void write_png(const RgbImage& image, const std::filesystem::path& path);
RgbImage read_png(const std::filesystem::path& path);

}  // namespace r2d2::pixel
