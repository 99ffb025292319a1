#include "r2d2/pixel.hpp"

#include <cmath>

#include "r2d2/error.hpp"

namespace r2d2::pixel {

namespace {

int auto_width_for(std::size_t pixel_count) {
  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(pixel_count))));
  std::size_t width = 1;
  while (width < side) width <<= 1;
  return static_cast<int>(width);
}

}  // namespace

RgbImage encode_bytes(ByteSpan bytes, WidthPolicy policy) {
  if (bytes.empty()) {
    throw Error(ErrorCode::EmptyInput, "cannot encode an empty byte stream");
  }
  const std::size_t pixel_count = (bytes.size() + 2) / 3;
  const int width = policy.is_auto() ? auto_width_for(pixel_count) : policy.fixed_width;
  if (width < 1) {
    throw Error(ErrorCode::EmptyInput, "fixed width must be >= 1");
  }
  const auto height =
      static_cast<int>((pixel_count + static_cast<std::size_t>(width) - 1) / width);

  RgbImage image;
  image.width = width;
  image.height = height;
  image.data.assign(3 * static_cast<std::size_t>(width) * height, 0);
  std::copy(bytes.begin(), bytes.end(), image.data.begin());
  return image;
}

Bytes decode_to_bytes(const RgbImage& image, std::size_t original_len) {
  if (original_len > image.data.size()) {
    throw Error(ErrorCode::LengthOutOfRange,
                std::to_string(original_len) + " bytes requested from a " +
                    std::to_string(image.data.size()) + "-byte image");
  }
  return Bytes(image.data.begin(), image.data.begin() + static_cast<std::ptrdiff_t>(original_len));
}

RgbImage resize_nearest(const RgbImage& image, int target_w, int target_h) {
  RgbImage out;
  out.width = target_w;
  out.height = target_h;
  out.data.resize(3 * static_cast<std::size_t>(target_w) * target_h);
  for (int y = 0; y < target_h; ++y) {
    const int src_y = static_cast<int>(static_cast<std::int64_t>(y) * image.height / target_h);
    for (int x = 0; x < target_w; ++x) {
      const int src_x = static_cast<int>(static_cast<std::int64_t>(x) * image.width / target_w);
      const std::uint8_t* src = image.at(src_x, src_y);
      std::uint8_t* dst = out.at(x, y);
      dst[0] = src[0];
      dst[1] = src[1];
      dst[2] = src[2];
    }
  }
  return out;
}

}  // namespace r2d2::pixel
