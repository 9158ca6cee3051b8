// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIHILBERT_METRIC_HPP
#define SEMIHILBERT_METRIC_HPP

#include <cstddef>
#include <span>

#include "semihilbert/linalg.hpp"
#include "semihilbert/matrix.hpp"
#include "semihilbert/random.hpp"

namespace semihilbert
{

/// A positive semidefinite A with everything the A-calculus needs, computed once.
class Metric
{
public:
  /// Throws NotHermitian or NegativeSpectrum (eigenvalue below -1e-10 ||A||).
  explicit Metric(const Matrix &a, double tol = kRankTol);

  static Metric identity(std::size_t n) { return Metric(Matrix::identity(n)); }

  /// diag(A, ..., A) with `copies` blocks. Caches are assembled blockwise and the
  /// base threshold is kept, so rank() == copies * base.rank().
  static Metric block_diagonal(const Metric &base, std::size_t copies);

  std::size_t dim() const noexcept { return a_.rows(); }
  std::size_t rank() const noexcept { return rank_; }
  bool full_rank() const noexcept { return rank_ == dim(); }
  double tau() const noexcept { return tau_; }
  double norm() const noexcept { return eig_.eigenvalues.empty() ? 0.0 : eig_.eigenvalues.front(); }

  const Matrix &matrix() const noexcept { return a_; }
  const HermEigen &eig() const noexcept { return eig_; }
  const Matrix &sqrt() const noexcept { return sqrt_; }
  const Matrix &sqrt_pinv() const noexcept { return sqrt_pinv_; }
  const Matrix &pinv() const noexcept { return pinv_; }
  /// Orthogonal projection onto range(A).
  const Matrix &proj() const noexcept { return proj_; }
  /// Lambda^{1/2} V_r* (rank x dim) and V_r Lambda^{-1/2} (dim x rank) over range(A).
  const Matrix &to_range() const noexcept { return to_range_; }
  const Matrix &from_range() const noexcept { return from_range_; }
  /// Orthonormal basis of ker(A), dim x (dim - rank).
  const Matrix &kernel() const noexcept { return kernel_; }

private:
  Metric() = default;
  void fill_caches();

  Matrix a_;
  HermEigen eig_;
  double tau_ = 0.0;
  std::size_t rank_ = 0;
  Matrix sqrt_;
  Matrix sqrt_pinv_;
  Matrix pinv_;
  Matrix proj_;
  Matrix to_range_;
  Matrix from_range_;
  Matrix kernel_;
};

struct ABoundedCert
{
  bool member = true;
  double residual = 0.0;
  double threshold = 1e-9;  // member iff residual <= threshold
};

/// <Ax, y>, linear in x.
cplx a_inner(const Metric &m, std::span<const cplx> x, std::span<const cplx> y);
double a_norm(const Metric &m, std::span<const cplx> x);

/// T maps ker A into ker A: ||A^{1/2} T K|| <= 1e-9 max(1, ||A^{1/2} T||).
ABoundedCert in_b_a(const Metric &m, const Matrix &t);

/// A^dagger T* A. Throws NotAMember.
Matrix sharp(const Metric &m, const Matrix &t);

/// A^{1/2} T (A^{1/2})^dagger. Throws NotAMember.
Matrix compress(const Metric &m, const Matrix &t);
/// The compression in range(A) coordinates, rank x rank and similar to T~
/// restricted to range(A). The A-quantities are evaluated on this.
Matrix compress_range(const Metric &m, const Matrix &t);

double a_seminorm(const Metric &m, const Matrix &t);
double a_num_radius(const Metric &m, const Matrix &t, const AngleSearch &opts = {});
double a_spec_radius(const Metric &m, const Matrix &t);

/// Smallest lambda with ||Tx||_A <= lambda ||x||_A for all x, i.e. ||T||_A.
inline double douglas_lambda(const Metric &m, const Matrix &t) { return a_seminorm(m, t); }

/// How |T|_A is realized.
///  Literal:          (T* A T)^{1/2}, the defining formula.
///  RangeNormalized:  (A^{1/2})^dagger (T~* T~)^{1/2} A^{1/2} with T~ = compress(T),
///                    the operator whose compression is the classical |T~|.
enum class AbsConvention
{
  Literal,
  RangeNormalized,
};

/// |T|_A. The literal form needs no membership; the range-normalized one does.
Matrix a_abs(const Metric &m, const Matrix &t, AbsConvention conv = AbsConvention::Literal);

/// h(|T|_A) from a single eigendecomposition.
Matrix a_abs_fn(const Metric &m, const Matrix &t, const ScalarFn &h, AbsConvention conv = AbsConvention::Literal);

/// AT Hermitian within 1e-9 max(1, ||AT||).
bool is_a_selfadjoint(const Metric &m, const Matrix &t);
/// A-selfadjoint and lambda_min(AT) >= -1e-9 ||AT||.
bool is_a_positive(const Metric &m, const Matrix &t);

/// x = (A^{1/2})^dagger u + k with u a uniform unit vector of range(A) and k a
/// Gaussian kernel component of scale `kernel_scale`; ||x||_A = 1 always.
Vector sample_a_unit(const Metric &m, SplitMix64 &rng, double kernel_scale = 1.0);

}  // namespace semihilbert

#endif  // SEMIHILBERT_METRIC_HPP
