#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "r2d2/error.hpp"

namespace r2d2::nn {

// Dense row-major n-d array. The product code instantiates T = float (the
// network contract is 32-bit reals); tests also instantiate double.
template <class T>
struct TensorT {
  std::vector<std::size_t> shape;
  std::vector<T> data;

  TensorT() = default;

  explicit TensorT(std::vector<std::size_t> s, T fill = T(0))
      : shape(std::move(s)),
        data(std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>()),
             fill) {}

  std::size_t size() const { return data.size(); }

  std::size_t dim(std::size_t i) const { return shape[i]; }

  // NCHW accessors; rank is the caller's responsibility.
  T& at4(std::size_t n, std::size_t c, std::size_t h, std::size_t w) {
    return data[((n * shape[1] + c) * shape[2] + h) * shape[3] + w];
  }
  const T& at4(std::size_t n, std::size_t c, std::size_t h, std::size_t w) const {
    return data[((n * shape[1] + c) * shape[2] + h) * shape[3] + w];
  }
  T& at2(std::size_t i, std::size_t j) { return data[i * shape[1] + j]; }
  const T& at2(std::size_t i, std::size_t j) const { return data[i * shape[1] + j]; }

  bool same_shape(const TensorT& other) const { return shape == other.shape; }

  bool operator==(const TensorT&) const = default;
};

using Tensor = TensorT<float>;

template <class T>
std::string shape_string(const TensorT<T>& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.shape.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(t.shape[i]);
  }
  return out + "]";
}

template <class T>
void require_shape(const TensorT<T>& t, const std::vector<std::size_t>& shape,
                   const char* what) {
  if (t.shape != shape) {
    throw Error(ErrorCode::ShapeMismatch, std::string(what) + " has shape " + shape_string(t));
  }
}

}  // namespace r2d2::nn
