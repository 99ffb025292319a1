#include "r2d2/dex.hpp"

#include <zlib.h>

#include <algorithm>

#include "r2d2/error.hpp"

namespace r2d2::dex {

namespace {

// "dex\n03?\0" with ? an ASCII digit; versions 035-039 are accepted.
constexpr std::array<std::uint8_t, 6> kMagicPrefix = {0x64, 0x65, 0x78, 0x0A, 0x30, 0x33};

bool valid_magic(ByteSpan bytes) {
  if (bytes.size() < 8) return false;
  if (!std::equal(kMagicPrefix.begin(), kMagicPrefix.end(), bytes.begin())) return false;
  return bytes[6] >= '5' && bytes[6] <= '9' && bytes[7] == 0x00;
}

}  // namespace

bool has_dex_magic(ByteSpan bytes) { return valid_magic(bytes); }

DexFile parse_dex(Bytes bytes, Validation validation) {
  if (bytes.size() < kHeaderSize) {
    throw Error(ErrorCode::TooShort,
                std::to_string(bytes.size()) + " bytes, DEX header needs " +
                    std::to_string(kHeaderSize));
  }
  if (!valid_magic(bytes)) {
    throw Error(ErrorCode::BadMagic, "not a DEX file (magic mismatch)");
  }

  DexFile file;
  std::copy_n(bytes.begin(), 8, file.header.magic.begin());
  file.header.checksum = read_u32le(bytes, 8);
  std::copy_n(bytes.begin() + 12, 20, file.header.signature.begin());
  file.header.file_size = read_u32le(bytes, 32);
  file.header.header_size = read_u32le(bytes, 36);
  file.header.endian_tag = read_u32le(bytes, 40);

  if (file.header.file_size != bytes.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "header file_size " + std::to_string(file.header.file_size) + " vs actual " +
                    std::to_string(bytes.size()));
  }
  if (validation == Validation::Strict) {
    const auto actual = static_cast<std::uint32_t>(
        adler32(1L, bytes.data() + 12, static_cast<uInt>(bytes.size() - 12)));
    if (actual != file.header.checksum) {
      throw Error(ErrorCode::ChecksumMismatch, "adler32 mismatch");
    }
  }

  file.bytes = std::move(bytes);
  return file;
}

}  // namespace r2d2::dex
