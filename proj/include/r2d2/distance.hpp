#pragma once

#include <cstdint>
#include <optional>

#include "r2d2/bytes.hpp"
#include "r2d2/pixel.hpp"

namespace r2d2::distance {

// Whole-image MSE upper bound: every channel off by 255, averaged over the 3
// channels. Anchors similarity_percent at 0 for black-vs-white.
constexpr double kMaxMse = 255.0 * 255.0;

constexpr std::size_t kDefaultLevenshteinCap = 65536;

// Unit-cost edit distance over the first min(len, cap) bytes of each input.
// In strict mode a capped input yields nullopt (skipped) instead of a
// silently truncated count. Full DP is quadratic; the cap keeps multi-MB
// pairs out of it.
std::optional<std::uint64_t> levenshtein(ByteSpan a, ByteSpan b,
                                         std::size_t cap = kDefaultLevenshteinCap,
                                         bool strict = true);

// Banded DP restricted to |i-j| <= band. Exact whenever the true distance is
// within the band, an upper bound otherwise. Meant as the coarse-ranking
// fallback for inputs past the cap.
std::uint64_t banded_levenshtein(ByteSpan a, ByteSpan b, std::size_t band);

// Mean over all pixels and all 3 channels of the squared channel difference.
double mse(const pixel::RgbImage& a, const pixel::RgbImage& b);
double rms(const pixel::RgbImage& a, const pixel::RgbImage& b);

// 100 * (1 - mse/kMaxMse), clamped to [0,100].
double similarity_percent(const pixel::RgbImage& a, const pixel::RgbImage& b);

struct SimilarityReport {
  std::optional<std::uint64_t> levenshtein;  // nullopt = skipped (over cap)
  double mse = 0.0;
  double rms = 0.0;
  double similarity_percent = 0.0;
};

// Cross-size pairs are first nearest-neighbour resized to the smaller
// dimensions, then compared.
SimilarityReport compare(const pixel::RgbImage& a, const pixel::RgbImage& b, ByteSpan a_bytes,
                         ByteSpan b_bytes, std::size_t lev_cap = kDefaultLevenshteinCap);

}  // namespace r2d2::distance
