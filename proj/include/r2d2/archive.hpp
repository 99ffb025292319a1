#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "r2d2/bytes.hpp"

namespace r2d2::archive {

// Read-only ZIP access, just enough to pull classes.dex out of an APK.
// Stored and deflate entries only; encrypted and zip64 archives are rejected.

struct ArchiveEntry {
  std::string name;
  std::uint16_t method = 0;  // 0 = stored, 8 = deflate
  std::uint32_t compressed_size = 0;
  std::uint32_t uncompressed_size = 0;
  std::uint32_t crc32 = 0;
  std::uint32_t local_header_offset = 0;
  bool encrypted = false;
};

class ArchiveIndex {
 public:
  const std::vector<ArchiveEntry>& entries() const { return entries_; }

  // Last central-directory occurrence wins; duplicate-name APKs are a known
  // evasion trick and installers resolve to the last entry.
  const ArchiveEntry* find(std::string_view name) const;

 private:
  friend ArchiveIndex open_archive(const std::filesystem::path& path);
  friend ArchiveIndex open_archive_bytes(Bytes bytes);
  friend Bytes extract_entry(const ArchiveIndex& index, std::string_view name);

  std::vector<ArchiveEntry> entries_;
  // Path sources are re-opened per extraction so concurrent extracts never
  // share a stream; byte sources are immutable.
  std::variant<std::filesystem::path, std::shared_ptr<const Bytes>> source_;
};

// Parses EOCD + central directory only; entry payloads are not touched.
ArchiveIndex open_archive(const std::filesystem::path& path);
ArchiveIndex open_archive_bytes(Bytes bytes);

// Decompresses and CRC-checks one entry.
Bytes extract_entry(const ArchiveIndex& index, std::string_view name);

// Exact, case-sensitive "classes.dex" at the archive root. Multi-dex
// (classes2.dex, ...) is deliberately ignored.
Bytes extract_classes_dex(const std::filesystem::path& path);

}  // namespace r2d2::archive
