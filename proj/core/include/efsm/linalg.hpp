#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace efsm {

using Vector = std::vector<double>;

/// Dense row-major matrix. Only what the model needs: element access,
/// row views and a couple of products.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<double>& data() const noexcept { return data_; }

  static Matrix identity(std::size_t n);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> v);

/// y = Aᵀx, i.e. y_j = Σ_i x_i A(i,j). Propagates a row-indexed distribution
/// through a row-stochastic matrix.
Vector transpose_times(const Matrix& a, std::span<const double> x);

Matrix multiply(const Matrix& a, const Matrix& b);

}  // namespace efsm
