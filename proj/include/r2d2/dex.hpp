#pragma once

#include <array>
#include <cstdint>

#include "r2d2/bytes.hpp"

namespace r2d2::dex {

constexpr std::size_t kHeaderSize = 112;

struct DexHeader {
  std::array<std::uint8_t, 8> magic{};
  std::uint32_t checksum = 0;  // adler32 of bytes [12, file_size)
  std::array<std::uint8_t, 20> signature{};  // stored SHA-1 field, not recomputed
  std::uint32_t file_size = 0;
  std::uint32_t header_size = 0;  // 0x70 in practice
  std::uint32_t endian_tag = 0;   // 0x12345678 little-endian in practice
};

struct DexFile {
  DexHeader header;
  Bytes bytes;
};

// Lenient by default: magic, minimum length and file_size only. Malformed
// samples are exactly the interesting ones, so the checksum is opt-in.
enum class Validation { Lenient, Strict };

// Validates and wraps a DEX byte stream. No class/method table parsing; the
// image encoder consumes raw bytes.
DexFile parse_dex(Bytes bytes, Validation validation = Validation::Lenient);

bool has_dex_magic(ByteSpan bytes);

}  // namespace r2d2::dex
