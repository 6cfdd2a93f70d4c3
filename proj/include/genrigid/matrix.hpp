#ifndef GENRIGID_MATRIX_HPP
#define GENRIGID_MATRIX_HPP

#include "genrigid/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace genrigid {

/// Dense row-major matrix over one of the supported scalar fields.
template <class S>
class Matrix {
 public:
  using Scalar = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Field<S>::zero()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw InputError("matrix entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Field<S>::one();
    return m;
  }
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Matrix m(rows, cols);
    m(i, j) = Field<S>::one();
    return m;
  }
  static Matrix diagonal(std::span<const S> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix column(std::span<const S> v) { return Matrix(v.size(), 1, std::vector<S>(v.begin(), v.end())); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const S> data() const { return data_; }
  std::span<S> data() { return data_; }
  std::span<const S> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<S> col(std::size_t j) const {
    std::vector<S> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Conjugate transpose with respect to the standard form.
  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = Field<S>::conj((*this)(i, j));
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  S trace() const {
    S t = Field<S>::zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    if constexpr (Field<S>::exact) {
      return std::all_of(data_.begin(), data_.end(), [](const S& x) { return Field<S>::is_zero(x); });
    } else {
      return max_abs() == 0.0;
    }
  }

  double max_abs() const {
    double m = 0.0;
    for (const S& x : data_) m = std::max(m, Field<S>::abs(x));
    return m;
  }

  /// Frobenius norm (as a double, also for exact matrices).
  double frobenius() const {
    double s = 0.0;
    for (const S& x : data_) {
      double a = Field<S>::abs(x);
      s += a * a;
    }
    return std::sqrt(s);
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (S& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (S& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (Field<S>::is_zero(aik, 0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const S& aij = a(i, j);
      if (Field<S>::is_zero(aij, 0.0)) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

/// m-fold tensor power; the 0-th power is the 1x1 identity.
template <class S>
Matrix<S> kron_power(const Matrix<S>& a, std::size_t m) {
  Matrix<S> r = Matrix<S>::identity(1);
  for (std::size_t k = 0; k < m; ++k) r = kron(r, a);
  return r;
}

template <class S>
Matrix<S> hcat(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() && a.cols() && b.cols()) throw InputError("hcat row mismatch");
  std::size_t rows = a.cols() ? a.rows() : b.rows();
  Matrix<S> c(rows, a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

template <class S>
Matrix<S> direct_sum(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

/// Row-major vectorization as a column vector.
template <class S>
std::vector<S> vec(const Matrix<S>& m) {
  return std::vector<S>(m.data().begin(), m.data().end());
}

template <class S>
Matrix<S> unvec(std::span<const S> v, std::size_t rows, std::size_t cols) {
  return Matrix<S>(rows, cols, std::vector<S>(v.begin(), v.end()));
}

/// Matrix whose columns are the given vectors.
template <class S>
Matrix<S> from_columns(const std::vector<std::vector<S>>& cols, std::size_t rows) {
  Matrix<S> m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

/// trace(a^H b), the standard Frobenius pairing.
template <class S>
S frobenius_pairing(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("pairing shape mismatch");
  S s = Field<S>::zero();
  auto ad = a.data();
  auto bd = b.data();
  for (std::size_t k = 0; k < ad.size(); ++k) s += Field<S>::conj(ad[k]) * bd[k];
  return s;
}

template <class To, class From>
Matrix<To> convert_matrix(const Matrix<From>& m) {
  Matrix<To> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = convert_scalar<To>(m(i, j));
  return r;
}

}  // namespace genrigid

#endif  // GENRIGID_MATRIX_HPP
