#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rem/errors.hpp"

namespace rem {

using Shape = std::vector<int64_t>;

inline int64_t shape_numel(const Shape& s) {
  int64_t n = 1;
  for (int64_t d : s) n *= d;
  return n;
}

inline std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ")";
  return os.str();
}

// Dense row-major f64 array. Rank 0 (empty shape) is a scalar with one element.
struct Tensor {
  Shape shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(Shape s) : shape(std::move(s)), data(shape_numel(shape), 0.0) {}
  Tensor(Shape s, std::vector<double> d) : shape(std::move(s)), data(std::move(d)) {
    if ((int64_t)data.size() != shape_numel(shape))
      throw ShapeError("tensor: data length " + std::to_string(data.size()) +
                       " does not match shape " + shape_str(shape));
  }

  static Tensor scalar(double v) {
    Tensor t{Shape{}};
    t.data[0] = v;
    return t;
  }
  static Tensor zeros(Shape s) { return Tensor(std::move(s)); }
  static Tensor full(Shape s, double v) {
    Tensor t(std::move(s));
    std::fill(t.data.begin(), t.data.end(), v);
    return t;
  }

  int64_t numel() const { return (int64_t)data.size(); }
  int64_t rank() const { return (int64_t)shape.size(); }
  int64_t rows() const { return rank() >= 1 ? shape[0] : 1; }
  int64_t cols() const { return rank() >= 2 ? shape[1] : 1; }
  bool is_scalar() const { return numel() == 1; }

  double item() const {
    if (!is_scalar()) throw ShapeError("item: tensor " + shape_str(shape) + " is not scalar");
    return data[0];
  }

  double& at(int64_t i) { return data[(size_t)i]; }
  double at(int64_t i) const { return data[(size_t)i]; }
  double& at(int64_t i, int64_t j) { return data[(size_t)(i * shape[1] + j)]; }
  double at(int64_t i, int64_t j) const { return data[(size_t)(i * shape[1] + j)]; }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }

  Tensor& operator+=(const Tensor& o) {
    if (!same_shape(o))
      throw ShapeError("+=: shape " + shape_str(shape) + " vs " + shape_str(o.shape));
    for (size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
    return *this;
  }
  Tensor& operator*=(double c) {
    for (double& v : data) v *= c;
    return *this;
  }
};

inline Tensor zeros_like(const Tensor& t) { return Tensor(t.shape); }

// Row i of a rank-2 tensor as a copy.
inline std::vector<double> row_copy(const Tensor& t, int64_t i) {
  int64_t c = t.shape[1];
  return std::vector<double>(t.data.begin() + i * c, t.data.begin() + (i + 1) * c);
}

}  // namespace rem
