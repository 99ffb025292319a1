#include "r2d2/bytes.hpp"

#include <cstdio>
#include <fstream>

#include "r2d2/error.hpp"

namespace r2d2 {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotZip: return "NotZip";
    case ErrorCode::TruncatedArchive: return "TruncatedArchive";
    case ErrorCode::EntryNotFound: return "EntryNotFound";
    case ErrorCode::CrcMismatch: return "CrcMismatch";
    case ErrorCode::UnsupportedMethod: return "UnsupportedMethod";
    case ErrorCode::CorruptDeflateStream: return "CorruptDeflateStream";
    case ErrorCode::NoClassesDex: return "NoClassesDex";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::LengthOutOfRange: return "LengthOutOfRange";
    case ErrorCode::UnsupportedPngFormat: return "UnsupportedPngFormat";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SingleClassDataset: return "SingleClassDataset";
    case ErrorCode::DivergedLoss: return "DivergedLoss";
    case ErrorCode::WrongInputSize: return "WrongInputSize";
    case ErrorCode::CorruptCheckpoint: return "CorruptCheckpoint";
    case ErrorCode::SpecParseError: return "SpecParseError";
    case ErrorCode::ManifestError: return "ManifestError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  }
  in.seekg(0, std::ios::end);
  const auto size = in.tellg();
  if (size < 0) {
    throw Error(ErrorCode::IoError, "cannot stat " + path.string());
  }
  in.seekg(0, std::ios::beg);
  Bytes data(static_cast<std::size_t>(size));
  if (size > 0) {
    in.read(reinterpret_cast<char*>(data.data()), size);
  }
  if (!in) {
    throw Error(ErrorCode::IoError, "short read on " + path.string());
  }
  return data;
}

void write_file(const std::filesystem::path& path, ByteSpan data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot create " + path.string());
  }
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw Error(ErrorCode::IoError, "short write on " + path.string());
  }
}

std::string to_hex(ByteSpan data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

namespace {
int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

std::optional<Bytes> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) return std::nullopt;
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_nibble(hex[i]);
    const int lo = hex_nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

}  // namespace r2d2
