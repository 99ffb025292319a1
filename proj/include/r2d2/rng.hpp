#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace r2d2 {

// Deterministic RNG. std::mt19937_64 output is pinned by the standard, but the
// std distribution objects are not, so all sampling here is hand-mapped from
// raw engine output. Identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // [0,1), 53 bits of mantissa
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  float next_float() { return static_cast<float>(next_u64() >> 40) * 0x1.0p-24f; }

  // [0,n); modulo bias is negligible for the n used here
  std::size_t next_index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

  float next_uniform(float lo, float hi) { return lo + (hi - lo) * next_float(); }

  std::uint8_t next_byte() { return static_cast<std::uint8_t>(next_u64() & 0xFF); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_index(i)]);
    }
  }

  // splitmix64 step, used to derive independent per-stream seeds
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace r2d2
