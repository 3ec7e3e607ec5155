#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "nilschouten/errors.hpp"
#include "nilschouten/scalar.hpp"

namespace nilschouten {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix over a scalar ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, lift<T>(0)) {}

  static Matrix square(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = lift<T>(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<T> column(std::size_t j) const {
    Vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_symmetric() const { return is_square() && *this == transpose(); }
  bool is_zero() const {
    for (const auto& x : data_)
      if (!is_zero_scalar(x)) return false;
    return true;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix& operator+=(const Matrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + rhs.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - rhs.data_[k];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero_scalar(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
      }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Vector<T> operator*(const Matrix<T>& m, const Vector<T>& v) {
  if (m.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector<T> out(m.rows(), lift<T>(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero_scalar(v[j])) out[i] = out[i] + m(i, j) * v[j];
  return out;
}

template <class T>
T trace(const Matrix<T>& m) {
  T t = lift<T>(0);
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t = t + m(i, i);
  return t;
}

/// tr(A∘B) = sum_ij A_ij B_ji, without forming the product.
template <class T>
T trace_of_product(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionMismatch("trace of product shape mismatch");
  T t = lift<T>(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero_scalar(a(i, j)) && !is_zero_scalar(b(j, i))) t = t + a(i, j) * b(j, i);
  return t;
}

template <class T>
bool is_zero_vector(const Vector<T>& v) {
  for (const auto& x : v)
    if (!is_zero_scalar(x)) return false;
  return true;
}

template <class T>
Vector<T> basis_vector(std::size_t n, std::size_t i) {
  Vector<T> v(n, lift<T>(0));
  v.at(i) = lift<T>(1);
  return v;
}

}  // namespace nilschouten
