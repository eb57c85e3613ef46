#include "gencliff/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gencliff {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = ScalarField(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<ScalarField>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  std::size_t n = a.rows_;
  for (const Matrix* x : {&a, &b, &c, &d})
    if (x->rows_ != n || x->cols_ != n) throw std::invalid_argument("blocks must be square of equal size");
  Matrix m(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      m(r, k) = a(r, k);
      m(r, n + k) = b(r, k);
      m(n + r, k) = c(r, k);
      m(n + r, n + k) = d(r, k);
    }
  }
  return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) m(a.rows_ + r, a.cols_ + c) = b(r, c);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw std::out_of_range("block exceeds matrix");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const ScalarField& f) { return f.is_zero(); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != ScalarField(r == c ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_constant() const {
  return std::all_of(data_.begin(), data_.end(), [](const ScalarField& f) { return f.is_constant(); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ScalarField& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const ScalarField& y = b(k, c);
        if (!y.is_zero()) m(r, c) += x * y;
      }
    }
  }
  return m;
}

Matrix operator*(const ScalarField& f, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_)
    if (!x.is_zero()) x = f * x;
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

std::vector<ScalarField> Matrix::apply(std::span<const ScalarField> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length differs from matrix width");
  std::vector<ScalarField> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    ScalarField p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      ScalarField f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

ScalarField Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  ScalarField det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return ScalarField();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      ScalarField f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c)
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::size_t Matrix::rank() const {
  if (!is_constant()) throw std::logic_error("rank requires a constant matrix");
  Matrix a = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(a(pivot, c), a(rank, c));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (a(r, col).is_zero()) continue;
      ScalarField f = a(r, col) / a(rank, col);
      for (std::size_t c = col; c < cols_; ++c) a(r, c) -= f * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

Matrix Matrix::diff(std::size_t var) const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (data_[k].uses_var(var)) m.data_[k] = data_[k].diff(var);
  return m;
}

Matrix Matrix::substitute(std::size_t var, const GaussianRational& value) const {
  Matrix m = *this;
  for (auto& x : m.data_) x = x.substitute(var, value);
  return m;
}

Matrix Matrix::eval(std::span<const GaussianRational> point) const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = ScalarField(data_[k].eval(point));
  return m;
}

std::string Matrix::to_string(const Chart& chart) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string(chart);
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace gencliff
