#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <memory>
#include <vector>

#include "r2d2/error.hpp"
#include "r2d2/pixel.hpp"

namespace r2d2::pixel {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f != nullptr) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void png_error_to_exception(png_structp, png_const_charp msg) {
  throw Error(ErrorCode::UnsupportedPngFormat, msg != nullptr ? msg : "libpng error");
}

void png_warning_ignore(png_structp, png_const_charp) {}

}  // namespace

void write_png(const RgbImage& image, const std::filesystem::path& path) {
  if (image.width < 1 || image.height < 1 ||
      image.data.size() != 3 * image.pixel_count()) {
    throw Error(ErrorCode::DimensionMismatch, "malformed image buffer");
  }
  FilePtr file(std::fopen(path.string().c_str(), "wb"));
  if (!file) {
    throw Error(ErrorCode::IoError, "cannot create " + path.string());
  }

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            png_error_to_exception, png_warning_ignore);
  if (png == nullptr) {
    throw Error(ErrorCode::IoError, "png_create_write_struct failed");
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw Error(ErrorCode::IoError, "png_create_info_struct failed");
  }

  try {
    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
                 static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    // Code-byte images are noise-like; filtering costs time and wins nothing.
    png_set_filter(png, 0, PNG_FILTER_NONE);
    png_set_compression_level(png, 1);
    png_write_info(png, info);

    std::vector<png_bytep> rows(static_cast<std::size_t>(image.height));
    for (int y = 0; y < image.height; ++y) {
      rows[static_cast<std::size_t>(y)] =
          const_cast<png_bytep>(image.data.data() + 3 * static_cast<std::size_t>(y) * image.width);
    }
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
  } catch (...) {
    png_destroy_write_struct(&png, &info);
    throw;
  }
  png_destroy_write_struct(&png, &info);
}

RgbImage read_png(const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.string().c_str(), "rb"));
  if (!file) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  }

  png_byte header[8] = {};
  if (std::fread(header, 1, 8, file.get()) != 8 || png_sig_cmp(header, 0, 8) != 0) {
    throw Error(ErrorCode::UnsupportedPngFormat, path.string() + " is not a PNG file");
  }

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                           png_error_to_exception, png_warning_ignore);
  if (png == nullptr) {
    throw Error(ErrorCode::IoError, "png_create_read_struct failed");
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw Error(ErrorCode::IoError, "png_create_info_struct failed");
  }

  RgbImage image;
  try {
    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_byte color_type = png_get_color_type(png, info);
    const png_byte bit_depth = png_get_bit_depth(png, info);
    const png_byte interlace = png_get_interlace_type(png, info);
    if (color_type != PNG_COLOR_TYPE_RGB || bit_depth != 8 || interlace != PNG_INTERLACE_NONE) {
      throw Error(ErrorCode::UnsupportedPngFormat,
                  "only 8-bit non-interlaced RGB is supported: " + path.string());
    }

    image.width = static_cast<int>(png_get_image_width(png, info));
    image.height = static_cast<int>(png_get_image_height(png, info));
    image.data.resize(3 * image.pixel_count());

    std::vector<png_bytep> rows(static_cast<std::size_t>(image.height));
    for (int y = 0; y < image.height; ++y) {
      rows[static_cast<std::size_t>(y)] =
          image.data.data() + 3 * static_cast<std::size_t>(y) * image.width;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
  } catch (...) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw;
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return image;
}

}  // namespace r2d2::pixel
