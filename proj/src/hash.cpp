#include "r2d2/hash.hpp"

#include <openssl/evp.h>

#include "r2d2/error.hpp"

namespace r2d2 {

namespace {

void digest(const EVP_MD* md, ByteSpan data, unsigned char* out, unsigned int out_len) {
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out, &len, md, nullptr) != 1 || len != out_len) {
    throw Error(ErrorCode::IoError, "digest computation failed");
  }
}

}  // namespace

std::string sha256_hex(ByteSpan data) {
  unsigned char out[32];
  digest(EVP_sha256(), data, out, sizeof(out));
  return to_hex(ByteSpan(out, sizeof(out)));
}

std::array<std::uint8_t, 20> sha1_digest(ByteSpan data) {
  std::array<std::uint8_t, 20> out{};
  digest(EVP_sha1(), data, out.data(), out.size());
  return out;
}

}  // namespace r2d2
