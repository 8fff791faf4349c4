#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tcd {

/// Dense row-major tensor of doubles. Everything the samplers do is
/// elementwise, so this stays deliberately small: shape bookkeeping plus the
/// handful of linear operations the diffusion math needs.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> s, double fill = 0.0)
      : shape(std::move(s)), data(count(shape), fill) {}
  Tensor(std::vector<std::size_t> s, std::vector<double> d)
      : shape(std::move(s)), data(std::move(d)) {
    if (data.size() != count(shape))
      throw std::invalid_argument("Tensor: data size does not match shape");
  }

  static std::size_t count(const std::vector<std::size_t>& s) {
    std::size_t n = 1;
    for (auto d : s) n *= d;
    return n;
  }

  std::size_t size() const { return data.size(); }
  double& operator[](std::size_t i) { return data[i]; }
  double operator[](std::size_t i) const { return data[i]; }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

inline void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (!a.same_shape(b))
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

/// a*x + b*y, elementwise.
inline Tensor lin_comb(double a, const Tensor& x, double b, const Tensor& y) {
  require_same_shape(x, y, "lin_comb");
  Tensor out(x.shape);
  for (std::size_t i = 0; i < x.size(); ++i) out.data[i] = a * x.data[i] + b * y.data[i];
  return out;
}

inline Tensor scaled(double a, const Tensor& x) {
  Tensor out(x.shape);
  for (std::size_t i = 0; i < x.size(); ++i) out.data[i] = a * x.data[i];
  return out;
}

inline double squared_l2(const Tensor& x) {
  double s = 0.0;
  for (double v : x.data) s += v * v;
  return s;
}

inline double rel_l2_error(const Tensor& got, const Tensor& want) {
  require_same_shape(got, want, "rel_l2_error");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const double d = got.data[i] - want.data[i];
    num += d * d;
    den += want.data[i] * want.data[i];
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace tcd
