#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hycedis {

/// Dense row-major float64 tensor. Rank is dynamic but everything in the
/// engine is rank 1 or 2.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;

  static Tensor zeros(std::vector<std::size_t> shape);
  static Tensor vec(std::vector<double> values);
  static Tensor matrix(std::size_t rows, std::size_t cols,
                       std::vector<double> values);

  std::size_t numel() const { return data.size(); }
  bool empty() const { return data.empty(); }

  std::size_t rank() const { return shape.size(); }
  std::size_t rows() const;
  std::size_t cols() const;
  /// Size of the last dimension (the per-sample feature width).
  std::size_t last_dim() const;

  double& operator()(std::size_t i) { return data[i]; }
  double operator()(std::size_t i) const { return data[i]; }
  double& operator()(std::size_t i, std::size_t j) {
    return data[i * cols_unchecked() + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data[i * cols_unchecked() + j];
  }

  double* row_ptr(std::size_t i) { return data.data() + i * cols_unchecked(); }
  const double* row_ptr(std::size_t i) const {
    return data.data() + i * cols_unchecked();
  }

  bool all_finite() const;
  void fill(double v);

 private:
  std::size_t cols_unchecked() const { return shape.back(); }
};

/// Squared Euclidean distance between equal-length vectors.
double squared_distance(const Tensor& a, const Tensor& b);

double dot(const double* a, const double* b, std::size_t n);

/// y = W x (+ y0 if accumulate). W is rows x cols, x has length cols.
void matvec(const Tensor& w, const double* x, double* y, bool accumulate);

/// y += W^T d. W is rows x cols, d has length rows, y length cols.
void matvec_transposed_acc(const Tensor& w, const double* d, double* y);

/// W += d x^T (rank-1 update). W is rows x cols.
void outer_acc(Tensor& w, const double* d, const double* x);

}  // namespace hycedis
