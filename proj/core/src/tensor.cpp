#include "hycedis/tensor.hpp"

#include <cmath>

#include "hycedis/errors.hpp"

namespace hycedis {

Tensor Tensor::zeros(std::vector<std::size_t> shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  Tensor t;
  t.shape = std::move(shape);
  t.data.assign(n, 0.0);
  return t;
}

Tensor Tensor::vec(std::vector<double> values) {
  Tensor t;
  t.shape = {values.size()};
  t.data = std::move(values);
  return t;
}

Tensor Tensor::matrix(std::size_t rows, std::size_t cols,
                      std::vector<double> values) {
  if (values.size() != rows * cols)
    throw DimensionError("matrix data size does not match rows*cols");
  Tensor t;
  t.shape = {rows, cols};
  t.data = std::move(values);
  return t;
}

std::size_t Tensor::rows() const {
  if (shape.size() != 2) throw DimensionError("rows() requires a rank-2 tensor");
  return shape[0];
}

std::size_t Tensor::cols() const {
  if (shape.size() != 2) throw DimensionError("cols() requires a rank-2 tensor");
  return shape[1];
}

std::size_t Tensor::last_dim() const {
  if (shape.empty()) throw DimensionError("last_dim() on rank-0 tensor");
  return shape.back();
}

bool Tensor::all_finite() const {
  for (double v : data)
    if (!std::isfinite(v)) return false;
  return true;
}

void Tensor::fill(double v) {
  for (double& x : data) x = v;
}

double squared_distance(const Tensor& a, const Tensor& b) {
  if (a.numel() != b.numel())
    throw DimensionError("squared_distance: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.numel(); ++i) {
    double d = a.data[i] - b.data[i];
    s += d * d;
  }
  return s;
}

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void matvec(const Tensor& w, const double* x, double* y, bool accumulate) {
  const std::size_t r = w.shape[0], c = w.shape[1];
  const double* wp = w.data.data();
  for (std::size_t i = 0; i < r; ++i) {
    double s = dot(wp + i * c, x, c);
    y[i] = accumulate ? y[i] + s : s;
  }
}

void matvec_transposed_acc(const Tensor& w, const double* d, double* y) {
  const std::size_t r = w.shape[0], c = w.shape[1];
  const double* wp = w.data.data();
  for (std::size_t i = 0; i < r; ++i) {
    const double di = d[i];
    if (di == 0.0) continue;
    const double* row = wp + i * c;
    for (std::size_t j = 0; j < c; ++j) y[j] += di * row[j];
  }
}

void outer_acc(Tensor& w, const double* d, const double* x) {
  const std::size_t r = w.shape[0], c = w.shape[1];
  double* wp = w.data.data();
  for (std::size_t i = 0; i < r; ++i) {
    const double di = d[i];
    if (di == 0.0) continue;
    double* row = wp + i * c;
    for (std::size_t j = 0; j < c; ++j) row[j] += di * x[j];
  }
}

}  // namespace hycedis
