// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIHILBERT_MATRIX_HPP
#define SEMIHILBERT_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace semihilbert
{

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;

/// Dense row-major complex matrix. Every operator in the library is one of these.
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);

  /// Row-wise literal, e.g. Matrix{{0, 1}, {0, 0}}.
  Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);
  static Matrix diagonal(std::span<const cplx> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const cplx> data() const noexcept { return data_; }
  std::span<cplx> data() noexcept { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const cplx> v);

  /// (H + H*)/2.
  Matrix hermitian_part() const;

  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  Matrix &operator+=(const Matrix &other);
  Matrix &operator-=(const Matrix &other);
  Matrix &operator*=(cplx s);

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator*(cplx s, Matrix a);
Matrix operator*(Matrix a, cplx s);
Vector operator*(const Matrix &a, std::span<const cplx> x);

/// A * B * C, the shape every compression and congruence in the library takes.
Matrix triple(const Matrix &a, const Matrix &b, const Matrix &c);

/// Largest absolute entrywise difference.
double max_abs_diff(const Matrix &a, const Matrix &b);

/// Integer power by repeated squaring; M^0 = I.
Matrix power(const Matrix &m, unsigned k);

/// Euclidean inner product, linear in the first argument: sum x_i conj(y_i).
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
double norm(std::span<const cplx> x);

Vector operator+(Vector a, const Vector &b);
Vector operator-(Vector a, const Vector &b);
Vector operator*(cplx s, Vector a);

}  // namespace semihilbert

#endif  // SEMIHILBERT_MATRIX_HPP
