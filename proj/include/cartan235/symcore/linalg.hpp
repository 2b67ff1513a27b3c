#pragma once

#include <optional>
#include <vector>

#include "cartan235/symcore/rational_function.hpp"

namespace cartan235::symcore {

/// Dense row-major matrix over the rational-function field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  RationalFunction& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RationalFunction& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) noexcept = default;
  bool is_identity() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RationalFunction> data_;
};

/// Bareiss fraction-free elimination after clearing row denominators; pivots
/// are chosen as the nonzero entry with the fewest terms.
RationalFunction determinant(const Matrix& a);

/// Exact inverse by fraction-free Gauss-Jordan elimination, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

struct LinearSolution {
  bool consistent = false;
  std::vector<RationalFunction> particular;  ///< free variables set to zero
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

/// Solves a x = b over the field by Gauss-Jordan elimination.
LinearSolution solve(const Matrix& a, const std::vector<RationalFunction>& b);

}  // namespace cartan235::symcore
