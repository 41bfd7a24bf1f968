#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace breitrabi {

/// Minimal dense row-major matrix. Everything in this library lives in
/// dimension <= 2(2I+1) <= 10, so no sparsity or expression machinery.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  DenseMatrix& operator*=(T s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    return a += b;
  }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
    return a -= b;
  }
  friend DenseMatrix operator*(T s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator*(DenseMatrix a, T s) { return a *= s; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matmul shape mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  void check_same_shape(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using Mat = DenseMatrix<double>;
using CMat = DenseMatrix<std::complex<double>>;
using Complex = std::complex<double>;

inline CMat to_complex(const Mat& a) {
  CMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  return c;
}

inline CMat adjoint(const CMat& a) {
  CMat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

template <typename T>
DenseMatrix<T> kron(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T aij = a(i, j);
      if (aij == T{}) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

template <typename T>
T trace(const DenseMatrix<T>& a) {
  T t{};
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

template <typename T>
double frobenius_norm(const DenseMatrix<T>& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(Complex(a(i, j)));
  return std::sqrt(s);
}

template <typename T>
double max_abs(const DenseMatrix<T>& a) {
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j)));
  return m;
}

// -- small vector helpers (states are std::vector<double> / <Complex>) --

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Conjugated inner product <a|b>.
inline Complex vdot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm2(const std::vector<Complex>& a) {
  double s = 0;
  for (const auto& x : a) s += std::norm(x);
  return std::sqrt(s);
}

inline double norm2(const std::vector<double>& a) {
  double s = 0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

inline std::vector<Complex> to_complex(const std::vector<double>& v) {
  return std::vector<Complex>(v.begin(), v.end());
}

inline std::vector<Complex> matvec(const CMat& m, const std::vector<Complex>& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply shape mismatch");
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

}  // namespace breitrabi
