#include "r2d2/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "r2d2/error.hpp"

namespace r2d2::distance {

namespace {

std::uint64_t levenshtein_dp(ByteSpan a, ByteSpan b) {
  // Two-row DP over the shorter input to bound memory.
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t cols = b.size();
  std::vector<std::uint32_t> prev(cols + 1), cur(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) prev[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 0; i < a.size(); ++i) {
    cur[0] = static_cast<std::uint32_t>(i + 1);
    const std::uint8_t ai = a[i];
    for (std::size_t j = 0; j < cols; ++j) {
      const std::uint32_t subst = prev[j] + (ai == b[j] ? 0 : 1);
      cur[j + 1] = std::min({cur[j] + 1, prev[j + 1] + 1, subst});
    }
    std::swap(prev, cur);
  }
  return prev[cols];
}

void require_same_dims(const pixel::RgbImage& a, const pixel::RgbImage& b) {
  if (a.width != b.width || a.height != b.height) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.width) + "x" + std::to_string(a.height) + " vs " +
                    std::to_string(b.width) + "x" + std::to_string(b.height));
  }
}

}  // namespace

std::optional<std::uint64_t> levenshtein(ByteSpan a, ByteSpan b, std::size_t cap, bool strict) {
  const bool truncated = a.size() > cap || b.size() > cap;
  if (truncated && strict) return std::nullopt;
  return levenshtein_dp(a.subspan(0, std::min(a.size(), cap)),
                        b.subspan(0, std::min(b.size(), cap)));
}

std::uint64_t banded_levenshtein(ByteSpan a, ByteSpan b, std::size_t band) {
  if (a.size() < b.size()) std::swap(a, b);
  // The end cell must lie inside the band or every path is cut off.
  band = std::max(band, a.size() - b.size() + 1);
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max() / 2;
  const std::size_t cols = b.size();
  std::vector<std::uint64_t> prev(cols + 1, kInf), cur(cols + 1, kInf);
  for (std::size_t j = 0; j <= std::min(cols, band); ++j) prev[j] = j;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t lo = (i + 1 > band) ? i + 1 - band : 0;
    const std::size_t hi = std::min(cols, i + 1 + band);
    std::fill(cur.begin(), cur.end(), kInf);
    if (lo == 0) cur[0] = i + 1;
    const std::uint8_t ai = a[i];
    for (std::size_t j = std::max<std::size_t>(lo, 1); j <= hi; ++j) {
      const std::uint64_t subst = prev[j - 1] + (ai == b[j - 1] ? 0 : 1);
      cur[j] = std::min({cur[j - 1] + 1, prev[j] + 1, subst});
    }
    std::swap(prev, cur);
  }
  return prev[cols];
}

double mse(const pixel::RgbImage& a, const pixel::RgbImage& b) {
  require_same_dims(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const double d = static_cast<double>(a.data[i]) - static_cast<double>(b.data[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(a.data.size());
}

double rms(const pixel::RgbImage& a, const pixel::RgbImage& b) { return std::sqrt(mse(a, b)); }

double similarity_percent(const pixel::RgbImage& a, const pixel::RgbImage& b) {
  const double value = 100.0 * (1.0 - mse(a, b) / kMaxMse);
  return std::clamp(value, 0.0, 100.0);
}

SimilarityReport compare(const pixel::RgbImage& a, const pixel::RgbImage& b, ByteSpan a_bytes,
                         ByteSpan b_bytes, std::size_t lev_cap) {
  const int w = std::min(a.width, b.width);
  const int h = std::min(a.height, b.height);
  const pixel::RgbImage ra = (a.width == w && a.height == h) ? a : pixel::resize_nearest(a, w, h);
  const pixel::RgbImage rb = (b.width == w && b.height == h) ? b : pixel::resize_nearest(b, w, h);

  SimilarityReport report;
  report.levenshtein = levenshtein(a_bytes, b_bytes, lev_cap, /*strict=*/true);
  report.mse = mse(ra, rb);
  report.rms = std::sqrt(report.mse);
  report.similarity_percent = std::clamp(100.0 * (1.0 - report.mse / kMaxMse), 0.0, 100.0);
  return report;
}

}  // namespace r2d2::distance
