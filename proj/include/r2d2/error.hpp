#pragma once

#include <stdexcept>
#include <string>

namespace r2d2 {

enum class ErrorCode {
  // archive
  NotZip,
  TruncatedArchive,
  EntryNotFound,
  CrcMismatch,
  UnsupportedMethod,
  CorruptDeflateStream,
  NoClassesDex,
  // dex
  BadMagic,
  SizeMismatch,
  TooShort,
  ChecksumMismatch,
  // pixel
  EmptyInput,
  LengthOutOfRange,
  UnsupportedPngFormat,
  // distance
  DimensionMismatch,
  // nn
  ShapeMismatch,
  SingleClassDataset,
  DivergedLoss,
  WrongInputSize,
  CorruptCheckpoint,
  // corpus / io
  SpecParseError,
  ManifestError,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace r2d2
