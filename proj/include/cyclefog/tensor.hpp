#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cyclefog/errors.hpp"

namespace cyclefog {

// Dense row-major tensor. Images and feature maps use CHW order; weights are
// stored flat as (out, in*kh*kw) for convolutions and (in, out*kh*kw) for
// transposed convolutions.
template <typename S>
struct Tensor {
  std::vector<int> shape;
  std::vector<S> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> shp)
      : shape(std::move(shp)), data(static_cast<std::size_t>(count(shape)), S{0}) {}

  static Tensor zeros(std::vector<int> shp) { return Tensor(std::move(shp)); }

  static Tensor full(std::vector<int> shp, S v) {
    Tensor t(std::move(shp));
    std::fill(t.data.begin(), t.data.end(), v);
    return t;
  }

  static Tensor scalar(S v) {
    Tensor t({1});
    t.data[0] = v;
    return t;
  }

  static std::int64_t count(const std::vector<int>& s) {
    std::int64_t n = 1;
    for (int d : s) n *= d;
    return n;
  }

  std::int64_t numel() const { return static_cast<std::int64_t>(data.size()); }
  int ndim() const { return static_cast<int>(shape.size()); }
  int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }
  bool same_shape(const Tensor& o) const { return shape == o.shape; }
  bool empty() const { return data.empty(); }

  S* ptr() { return data.data(); }
  const S* ptr() const { return data.data(); }

  S& operator[](std::int64_t i) { return data[static_cast<std::size_t>(i)]; }
  const S& operator[](std::int64_t i) const { return data[static_cast<std::size_t>(i)]; }

  // (c, y, x) accessor for CHW tensors.
  S& at(int c, int y, int x) {
    const int h = shape[shape.size() - 2], w = shape[shape.size() - 1];
    return data[(static_cast<std::size_t>(c) * h + y) * w + x];
  }
  const S& at(int c, int y, int x) const {
    const int h = shape[shape.size() - 2], w = shape[shape.size() - 1];
    return data[(static_cast<std::size_t>(c) * h + y) * w + x];
  }

  // (y, x) accessor for HW tensors.
  S& at(int y, int x) { return data[static_cast<std::size_t>(y) * shape.back() + x]; }
  const S& at(int y, int x) const {
    return data[static_cast<std::size_t>(y) * shape.back() + x];
  }

  bool all_finite() const {
    for (const S v : data) {
      if (!std::isfinite(static_cast<double>(v))) return false;
    }
    return true;
  }

  template <typename R>
  Tensor<R> cast() const {
    Tensor<R> out;
    out.shape = shape;
    out.data.resize(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<R>(data[i]);
    return out;
  }

  void fill(S v) { std::fill(data.begin(), data.end(), v); }

  void clamp(S lo, S hi) {
    for (S& v : data) v = std::min(hi, std::max(lo, v));
  }
};

template <typename S>
void require_same_shape(const Tensor<S>& a, const Tensor<S>& b, const char* where) {
  if (!a.same_shape(b)) {
    throw ContractError(std::string(where) + ": shape mismatch");
  }
}

}  // namespace cyclefog
