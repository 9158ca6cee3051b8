// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIHILBERT_LINALG_HPP
#define SEMIHILBERT_LINALG_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "semihilbert/matrix.hpp"

namespace semihilbert
{

/// Unitary basis U (eigenvectors in columns) and real eigenvalues, descending.
struct HermEigen
{
  Matrix basis;
  std::vector<double> eigenvalues;
};

/// Relative eigenvalue cutoff below which a PSD spectrum entry is treated as zero.
inline constexpr double kRankTol = 1e-10;

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// The input is symmetrized first; throws NotHermitian when ||H - H*||_F > 1e-10 max(1, ||H||_F).
HermEigen herm_eig(const Matrix &h);

/// Eigenvalues only, descending. Same solver without accumulating the basis.
std::vector<double> herm_eigvals(const Matrix &h);

/// Absolute rank threshold tau = tol * n * lambda_max for a PSD spectrum.
double rank_threshold(std::span<const double> eigenvalues, double tol = kRankTol);

/// Moore-Penrose inverse of a Hermitian PSD matrix; eigenvalues <= tau map to zero.
Matrix pinv(const Matrix &a, double tol = kRankTol);

using ScalarFn = std::function<double(double)>;

/// Spectral calculus U f(L) U* on a Hermitian PSD matrix. Eigenvalues in
/// [-1e-10 ||H||, noise floor] are clamped to 0 first; anything more negative
/// throws NegativeSpectrum. `scale` raises ||H|| for both tests when H is a
/// product whose rounding is set by its factors, e.g. ||T||^2 ||A|| for T*AT.
Matrix psd_fn(const Matrix &h, const ScalarFn &f, double scale = 0.0);
Matrix psd_fn(const HermEigen &eig, const ScalarFn &f, double scale = 0.0);

/// Spectral calculus on any Hermitian matrix, no sign restriction.
Matrix herm_fn(const Matrix &h, const ScalarFn &f);

/// Knobs for maximizing a periodic function of an angle.
struct AngleSearch
{
  std::size_t grid = 1024;   // angles per 2*pi
  std::size_t brackets = 3;  // local grid maxima refined by golden section
  double accuracy = 1e-10;   // absolute accuracy on the maximum
};

/// Maximum of a continuous function with the given period, Lipschitz bound used to
/// turn `accuracy` into a golden-section bracket width.
double maximize_periodic(const std::function<double(double)> &fn, double period, double lipschitz,
                         const AngleSearch &opts = {});

/// Classical numerical radius w(M) = max_theta lambda_max((e^{i theta} M + e^{-i theta} M*)/2).
double num_radius(const Matrix &m, const AngleSearch &opts = {});

/// Largest singular value, sqrt(lambda_max(M*M)).
double op_norm(const Matrix &m);

/// Spectral radius from the Gelfand sequence ||M^(2^k)||^(1/2^k) with per-step normalization.
double spec_radius(const Matrix &m);

}  // namespace semihilbert

#endif  // SEMIHILBERT_LINALG_HPP
