#pragma once

#include <array>
#include <string>

#include "r2d2/bytes.hpp"

namespace r2d2 {

std::string sha256_hex(ByteSpan data);
std::array<std::uint8_t, 20> sha1_digest(ByteSpan data);

}  // namespace r2d2
