#pragma once

// Dense matrices over ScalarField.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gencliff/scalar.hpp"

namespace gencliff {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<ScalarField>>& rows);
  /// [[a, b], [c, d]] for square blocks of equal size.
  static Matrix from_blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
  /// Block-diagonal sum.
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ScalarField& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ScalarField& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_constant() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const ScalarField& f, const Matrix& m);
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::vector<ScalarField> apply(std::span<const ScalarField> v) const;
  Matrix transpose() const;
  /// Exact Gauss-Jordan inverse; nullopt when singular.
  std::optional<Matrix> inverse() const;
  ScalarField determinant() const;
  /// Rank over the constants; requires is_constant().
  std::size_t rank() const;

  Matrix diff(std::size_t var) const;
  Matrix substitute(std::size_t var, const GaussianRational& value) const;
  /// Entrywise evaluation to a constant matrix.
  Matrix eval(std::span<const GaussianRational> point) const;

  std::string to_string(const Chart& chart) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ScalarField> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace gencliff
