#include "r2d2/archive.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>

#include "r2d2/error.hpp"

namespace r2d2::archive {

namespace {

constexpr std::uint32_t kEocdSignature = 0x06054B50;
constexpr std::uint32_t kCentralSignature = 0x02014B50;
constexpr std::uint32_t kLocalSignature = 0x04034B50;
constexpr std::size_t kEocdMinSize = 22;
constexpr std::size_t kMaxCommentLen = 65535;
constexpr std::size_t kEocdSearchWindow = kEocdMinSize + kMaxCommentLen;
constexpr std::size_t kLocalHeaderSize = 30;
constexpr std::uint16_t kFlagEncrypted = 1u << 0;

// Random access over either source variant. Path sources use a private
// stream per reader, so one index can serve concurrent extractions.
class Reader {
 public:
  explicit Reader(const std::filesystem::path& path) : stream_(path, std::ios::binary) {
    if (!stream_) {
      throw Error(ErrorCode::IoError, "cannot open " + path.string());
    }
    stream_.seekg(0, std::ios::end);
    size_ = static_cast<std::uint64_t>(stream_.tellg());
  }

  explicit Reader(const Bytes* bytes) : bytes_(bytes), size_(bytes->size()) {}

  std::uint64_t size() const { return size_; }

  Bytes read_at(std::uint64_t offset, std::size_t len) {
    Bytes out(len);
    if (offset + len > size_) {
      throw Error(ErrorCode::TruncatedArchive, "read past end of file");
    }
    if (bytes_ != nullptr) {
      std::copy_n(bytes_->begin() + static_cast<std::ptrdiff_t>(offset), len, out.begin());
    } else {
      stream_.seekg(static_cast<std::streamoff>(offset));
      stream_.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(len));
      if (!stream_) {
        throw Error(ErrorCode::IoError, "short read");
      }
    }
    return out;
  }

 private:
  std::ifstream stream_;
  const Bytes* bytes_ = nullptr;
  std::uint64_t size_ = 0;
};

Reader make_reader(const ArchiveIndex& index,
                   const std::variant<std::filesystem::path, std::shared_ptr<const Bytes>>& src) {
  (void)index;
  if (const auto* path = std::get_if<std::filesystem::path>(&src)) {
    return Reader(*path);
  }
  return Reader(std::get<std::shared_ptr<const Bytes>>(src).get());
}

struct Eocd {
  std::uint16_t entry_count;
  std::uint32_t cd_size;
  std::uint32_t cd_offset;
};

Eocd find_eocd(Reader& reader) {
  if (reader.size() < kEocdMinSize) {
    throw Error(ErrorCode::NotZip, "file smaller than an EOCD record");
  }
  const std::uint64_t window_len = std::min<std::uint64_t>(reader.size(), kEocdSearchWindow);
  const std::uint64_t window_start = reader.size() - window_len;
  const Bytes window = reader.read_at(window_start, static_cast<std::size_t>(window_len));

  // Scan backwards: the EOCD of a well-formed archive is the last one.
  for (std::size_t i = static_cast<std::size_t>(window_len) - kEocdMinSize + 1; i-- > 0;) {
    if (read_u32le(window, i) != kEocdSignature) continue;
    const std::uint16_t comment_len = read_u16le(window, i + 20);
    if (i + kEocdMinSize + comment_len > window_len) continue;

    const std::uint16_t disk_num = read_u16le(window, i + 4);
    const std::uint16_t cd_disk = read_u16le(window, i + 6);
    const std::uint16_t disk_entries = read_u16le(window, i + 8);
    const std::uint16_t total_entries = read_u16le(window, i + 10);
    if (disk_num != 0 || cd_disk != 0 || disk_entries != total_entries) {
      throw Error(ErrorCode::UnsupportedMethod, "multi-disk archives not supported");
    }
    Eocd eocd{};
    eocd.entry_count = total_entries;
    eocd.cd_size = read_u32le(window, i + 12);
    eocd.cd_offset = read_u32le(window, i + 16);
    if (eocd.entry_count == 0xFFFF || eocd.cd_size == 0xFFFFFFFF || eocd.cd_offset == 0xFFFFFFFF) {
      throw Error(ErrorCode::UnsupportedMethod, "zip64 archives not supported");
    }
    return eocd;
  }
  throw Error(ErrorCode::NotZip, "no end-of-central-directory signature");
}

std::vector<ArchiveEntry> parse_central_directory(Reader& reader, const Eocd& eocd) {
  if (static_cast<std::uint64_t>(eocd.cd_offset) + eocd.cd_size > reader.size()) {
    throw Error(ErrorCode::TruncatedArchive, "central directory extends past end of file");
  }
  const Bytes cd = reader.read_at(eocd.cd_offset, eocd.cd_size);

  std::vector<ArchiveEntry> entries;
  entries.reserve(eocd.entry_count);
  std::size_t pos = 0;
  for (std::uint16_t i = 0; i < eocd.entry_count; ++i) {
    if (pos + 46 > cd.size()) {
      throw Error(ErrorCode::TruncatedArchive, "central directory ends mid-record");
    }
    if (read_u32le(cd, pos) != kCentralSignature) {
      throw Error(ErrorCode::TruncatedArchive, "bad central directory record signature");
    }
    ArchiveEntry entry;
    const std::uint16_t flags = read_u16le(cd, pos + 8);
    entry.encrypted = (flags & kFlagEncrypted) != 0;
    entry.method = read_u16le(cd, pos + 10);
    entry.crc32 = read_u32le(cd, pos + 16);
    entry.compressed_size = read_u32le(cd, pos + 20);
    entry.uncompressed_size = read_u32le(cd, pos + 24);
    const std::uint16_t name_len = read_u16le(cd, pos + 28);
    const std::uint16_t extra_len = read_u16le(cd, pos + 30);
    const std::uint16_t comment_len = read_u16le(cd, pos + 32);
    entry.local_header_offset = read_u32le(cd, pos + 42);
    if (entry.compressed_size == 0xFFFFFFFF || entry.uncompressed_size == 0xFFFFFFFF ||
        entry.local_header_offset == 0xFFFFFFFF) {
      throw Error(ErrorCode::UnsupportedMethod, "zip64 entry not supported");
    }
    if (pos + 46 + name_len + extra_len + comment_len > cd.size()) {
      throw Error(ErrorCode::TruncatedArchive, "central directory record overruns directory");
    }
    entry.name.assign(reinterpret_cast<const char*>(cd.data()) + pos + 46, name_len);
    entries.push_back(std::move(entry));
    pos += 46u + name_len + extra_len + comment_len;
  }
  return entries;
}

Bytes inflate_raw(ByteSpan compressed, std::uint32_t expected_size) {
  Bytes out(expected_size);
  z_stream strm{};
  if (inflateInit2(&strm, -MAX_WBITS) != Z_OK) {
    throw Error(ErrorCode::CorruptDeflateStream, "inflate init failed");
  }
  strm.next_in = const_cast<Bytef*>(compressed.data());
  strm.avail_in = static_cast<uInt>(compressed.size());
  strm.next_out = out.data();
  strm.avail_out = expected_size;
  const int rc = inflate(&strm, Z_FINISH);
  const uLong produced = strm.total_out;
  inflateEnd(&strm);
  if (rc != Z_STREAM_END || produced != expected_size) {
    throw Error(ErrorCode::CorruptDeflateStream, "deflate stream did not decode cleanly");
  }
  return out;
}

Bytes extract_with_reader(Reader& reader, const ArchiveEntry& entry) {
  if (entry.encrypted) {
    throw Error(ErrorCode::UnsupportedMethod, "encrypted entry: " + entry.name);
  }
  if (entry.method != 0 && entry.method != 8) {
    throw Error(ErrorCode::UnsupportedMethod,
                "compression method " + std::to_string(entry.method) + ": " + entry.name);
  }

  const Bytes local = reader.read_at(entry.local_header_offset, kLocalHeaderSize);
  if (read_u32le(local, 0) != kLocalSignature) {
    throw Error(ErrorCode::TruncatedArchive, "bad local header for " + entry.name);
  }
  // The local header's own name/extra lengths locate the payload; sizes and
  // CRC come from the central directory (local copies may be deferred to a
  // data descriptor).
  const std::uint16_t name_len = read_u16le(local, 26);
  const std::uint16_t extra_len = read_u16le(local, 28);
  const std::uint64_t data_offset = entry.local_header_offset + kLocalHeaderSize + name_len + extra_len;

  Bytes data;
  if (entry.method == 0) {
    data = reader.read_at(data_offset, entry.uncompressed_size);
  } else {
    const Bytes compressed = reader.read_at(data_offset, entry.compressed_size);
    data = inflate_raw(compressed, entry.uncompressed_size);
  }

  const auto actual_crc =
      static_cast<std::uint32_t>(::crc32(0L, data.data(), static_cast<uInt>(data.size())));
  if (actual_crc != entry.crc32) {
    throw Error(ErrorCode::CrcMismatch, "crc check failed for " + entry.name);
  }
  return data;
}

}  // namespace

const ArchiveEntry* ArchiveIndex::find(std::string_view name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->name == name) return &*it;
  }
  return nullptr;
}

ArchiveIndex open_archive(const std::filesystem::path& path) {
  Reader reader(path);
  const Eocd eocd = find_eocd(reader);
  ArchiveIndex index;
  index.entries_ = parse_central_directory(reader, eocd);
  index.source_ = path;
  return index;
}

ArchiveIndex open_archive_bytes(Bytes bytes) {
  auto owned = std::make_shared<const Bytes>(std::move(bytes));
  Reader reader(owned.get());
  const Eocd eocd = find_eocd(reader);
  ArchiveIndex index;
  index.entries_ = parse_central_directory(reader, eocd);
  index.source_ = std::move(owned);
  return index;
}

Bytes extract_entry(const ArchiveIndex& index, std::string_view name) {
  const ArchiveEntry* entry = index.find(name);
  if (entry == nullptr) {
    throw Error(ErrorCode::EntryNotFound, std::string(name));
  }
  Reader reader = make_reader(index, index.source_);
  return extract_with_reader(reader, *entry);
}

Bytes extract_classes_dex(const std::filesystem::path& path) {
  const ArchiveIndex index = open_archive(path);
  if (index.find("classes.dex") == nullptr) {
    throw Error(ErrorCode::NoClassesDex, path.string() + " has no classes.dex entry");
  }
  return extract_entry(index, "classes.dex");
}

}  // namespace r2d2::archive
