// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#include "semihilbert/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "semihilbert/error.hpp"

namespace semihilbert
{

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
  : rows_(rows), cols_(cols), data_(std::move(data))
{
  if (data_.size() != rows_ * cols_)
  {
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows*cols");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows)
{
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows)
  {
    if (row.size() != cols_)
    {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n)
{
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
  {
    m(i, i) = 1.0;
  }
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values)
{
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
  {
    m(i, i) = values[i];
  }
  return m;
}

Matrix Matrix::diagonal(std::span<const cplx> values)
{
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
  {
    m(i, i) = values[i];
  }
  return m;
}

Matrix Matrix::adjoint() const
{
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
  {
    for (std::size_t j = 0; j < cols_; ++j)
    {
      t(j, i) = std::conj((*this)(i, j));
    }
  }
  return t;
}

Matrix Matrix::transpose() const
{
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
  {
    for (std::size_t j = 0; j < cols_; ++j)
    {
      t(j, i) = (*this)(i, j);
    }
  }
  return t;
}

Vector Matrix::column(std::size_t j) const
{
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
  {
    v[i] = (*this)(i, j);
  }
  return v;
}

void Matrix::set_column(std::size_t j, std::span<const cplx> v)
{
  for (std::size_t i = 0; i < rows_; ++i)
  {
    (*this)(i, j) = v[i];
  }
}

Matrix Matrix::hermitian_part() const
{
  Matrix h = *this;
  for (std::size_t i = 0; i < rows_; ++i)
  {
    h(i, i) = (*this)(i, i).real();
    for (std::size_t j = i + 1; j < cols_; ++j)
    {
      const cplx avg = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
  }
  return h;
}

double Matrix::frobenius_norm() const
{
  double s = 0.0;
  for (const auto &z : data_)
  {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

double Matrix::max_abs() const
{
  double m = 0.0;
  for (const auto &z : data_)
  {
    m = std::max(m, std::abs(z));
  }
  return m;
}

bool Matrix::all_finite() const
{
  return std::all_of(data_.begin(), data_.end(),
                     [](const cplx &z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

Matrix &Matrix::operator+=(const Matrix &other)
{
  if (rows_ != other.rows_ || cols_ != other.cols_)
  {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  }
  for (std::size_t k = 0; k < data_.size(); ++k)
  {
    data_[k] += other.data_[k];
  }
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &other)
{
  if (rows_ != other.rows_ || cols_ != other.cols_)
  {
    throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  }
  for (std::size_t k = 0; k < data_.size(); ++k)
  {
    data_[k] -= other.data_[k];
  }
  return *this;
}

Matrix &Matrix::operator*=(cplx s)
{
  for (auto &z : data_)
  {
    z *= s;
  }
  return *this;
}

Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= -1.0; }
Matrix operator*(cplx s, Matrix a) { return a *= s; }
Matrix operator*(Matrix a, cplx s) { return a *= s; }

Matrix operator*(const Matrix &a, const Matrix &b)
{
  if (a.cols() != b.rows())
  {
    throw Error(ErrorKind::DimensionMismatch, "matrix product");
  }
  Matrix c(a.rows(), b.cols());
  const std::size_t n = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
  {
    for (std::size_t k = 0; k < n; ++k)
    {
      const cplx aik = a(i, k);
      if (aik == cplx{})
      {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j)
      {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Vector operator*(const Matrix &a, std::span<const cplx> x)
{
  if (a.cols() != x.size())
  {
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  }
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
  {
    cplx s{};
    for (std::size_t j = 0; j < a.cols(); ++j)
    {
      s += a(i, j) * x[j];
    }
    y[i] = s;
  }
  return y;
}

Matrix triple(const Matrix &a, const Matrix &b, const Matrix &c) { return (a * b) * c; }

double max_abs_diff(const Matrix &a, const Matrix &b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
  {
    throw Error(ErrorKind::DimensionMismatch, "max_abs_diff");
  }
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
  {
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  }
  return m;
}

Matrix power(const Matrix &m, unsigned k)
{
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (k > 0)
  {
    if (k & 1U)
    {
      result = result * base;
    }
    k >>= 1U;
    if (k > 0)
    {
      base = base * base;
    }
  }
  return result;
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y)
{
  if (x.size() != y.size())
  {
    throw Error(ErrorKind::DimensionMismatch, "inner product");
  }
  cplx s{};
  for (std::size_t i = 0; i < x.size(); ++i)
  {
    s += x[i] * std::conj(y[i]);
  }
  return s;
}

double norm(std::span<const cplx> x)
{
  double s = 0.0;
  for (const auto &z : x)
  {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

Vector operator+(Vector a, const Vector &b)
{
  if (a.size() != b.size())
  {
    throw Error(ErrorKind::DimensionMismatch, "vector sum");
  }
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    a[i] += b[i];
  }
  return a;
}

Vector operator-(Vector a, const Vector &b)
{
  if (a.size() != b.size())
  {
    throw Error(ErrorKind::DimensionMismatch, "vector difference");
  }
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    a[i] -= b[i];
  }
  return a;
}

Vector operator*(cplx s, Vector a)
{
  for (auto &z : a)
  {
    z *= s;
  }
  return a;
}

}  // namespace semihilbert
