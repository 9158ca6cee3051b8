// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#include "semihilbert/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "semihilbert/error.hpp"

namespace semihilbert
{

namespace
{

void check_square(const Metric &m, const Matrix &t, const char *what)
{
  if (t.rows() != m.dim() || t.cols() != m.dim())
  {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": operator is " + std::to_string(t.rows()) + "x" +
                                                  std::to_string(t.cols()) + ", metric is " +
                                                  std::to_string(m.dim()));
  }
}

void require_member(const Metric &m, const Matrix &t, const char *what)
{
  check_square(m, t, what);
  const ABoundedCert cert = in_b_a(m, t);
  if (!cert.member)
  {
    throw Error(ErrorKind::NotAMember, std::string(what) + ": T does not map ker A into ker A (residual " +
                                           std::to_string(cert.residual) + ")");
  }
}

// U diag(f(lambda_k)) U* with f applied only above tau.
Matrix spectral(const HermEigen &eig, double tau, double (*f)(double))
{
  const std::size_t n = eig.eigenvalues.size();
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k)
  {
    if (eig.eigenvalues[k] <= tau)
    {
      continue;
    }
    const double fk = f(eig.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i)
    {
      const cplx ui = eig.basis(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j)
      {
        out(i, j) += ui * std::conj(eig.basis(j, k));
      }
    }
  }
  return out.hermitian_part();
}

}  // namespace

Metric::Metric(const Matrix &a, double tol)
{
  eig_ = herm_eig(a);
  a_ = a.hermitian_part();
  const double top = eig_.eigenvalues.empty() ? 0.0 : std::max(0.0, eig_.eigenvalues.front());
  if (!eig_.eigenvalues.empty() && eig_.eigenvalues.back() < -1e-10 * top)
  {
    throw Error(ErrorKind::NegativeSpectrum, "metric eigenvalue " + std::to_string(eig_.eigenvalues.back()));
  }
  tau_ = rank_threshold(eig_.eigenvalues, tol);
  rank_ = static_cast<std::size_t>(
      std::count_if(eig_.eigenvalues.begin(), eig_.eigenvalues.end(), [&](double l) { return l > tau_; }));
  fill_caches();
}

void Metric::fill_caches()
{
  sqrt_ = spectral(eig_, tau_, [](double t) { return std::sqrt(t); });
  sqrt_pinv_ = spectral(eig_, tau_, [](double t) { return 1.0 / std::sqrt(t); });
  pinv_ = spectral(eig_, tau_, [](double t) { return 1.0 / t; });
  proj_ = spectral(eig_, tau_, [](double) { return 1.0; });
  const std::size_t n = dim();
  to_range_ = Matrix(rank_, n);
  from_range_ = Matrix(n, rank_);
  for (std::size_t k = 0; k < rank_; ++k)
  {
    const double s = std::sqrt(eig_.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i)
    {
      to_range_(k, i) = s * std::conj(eig_.basis(i, k));
      from_range_(i, k) = eig_.basis(i, k) / s;
    }
  }
  kernel_ = Matrix(n, n - rank_);
  for (std::size_t k = rank_; k < n; ++k)
  {
    for (std::size_t i = 0; i < n; ++i)
    {
      kernel_(i, k - rank_) = eig_.basis(i, k);
    }
  }
}

Metric Metric::block_diagonal(const Metric &base, std::size_t copies)
{
  const std::size_t n = base.dim();
  const std::size_t big = n * copies;
  Metric out;
  out.a_ = Matrix(big, big);
  out.eig_ = HermEigen{Matrix(big, big), std::vector<double>(big)};
  for (std::size_t c = 0; c < copies; ++c)
  {
    for (std::size_t i = 0; i < n; ++i)
    {
      for (std::size_t j = 0; j < n; ++j)
      {
        out.a_(c * n + i, c * n + j) = base.a_(i, j);
      }
    }
  }
  // Eigenvector k of copy c goes to column k * copies + c, keeping the order descending.
  for (std::size_t k = 0; k < n; ++k)
  {
    for (std::size_t c = 0; c < copies; ++c)
    {
      const std::size_t col = k * copies + c;
      out.eig_.eigenvalues[col] = base.eig_.eigenvalues[k];
      for (std::size_t i = 0; i < n; ++i)
      {
        out.eig_.basis(c * n + i, col) = base.eig_.basis(i, k);
      }
    }
  }
  out.tau_ = base.tau_;
  out.rank_ = base.rank_ * copies;
  out.fill_caches();
  return out;
}

cplx a_inner(const Metric &m, std::span<const cplx> x, std::span<const cplx> y)
{
  if (x.size() != m.dim() || y.size() != m.dim())
  {
    throw Error(ErrorKind::DimensionMismatch, "a_inner: vector length differs from metric dimension");
  }
  return inner(m.matrix() * x, y);
}

double a_norm(const Metric &m, std::span<const cplx> x) { return std::sqrt(std::max(0.0, a_inner(m, x, x).real())); }

ABoundedCert in_b_a(const Metric &m, const Matrix &t)
{
  check_square(m, t, "in_b_a");
  if (m.full_rank())
  {
    return {true, 0.0, 1e-9};
  }
  const Matrix st = m.sqrt() * t;
  const double residual = op_norm(st * m.kernel());
  // plus the rounding level of forming A^{1/2} T K, which dominates when T is large on ker A
  const double eps = std::numeric_limits<double>::epsilon();
  const double noise = 64.0 * static_cast<double>(m.dim()) * eps * std::sqrt(m.norm()) * t.frobenius_norm();
  const double threshold = 1e-9 * std::max(1.0, op_norm(st)) + noise;
  return {residual <= threshold, residual, threshold};
}

Matrix sharp(const Metric &m, const Matrix &t)
{
  require_member(m, t, "sharp");
  return triple(m.pinv(), t.adjoint(), m.matrix());
}

Matrix compress(const Metric &m, const Matrix &t)
{
  require_member(m, t, "compress");
  return triple(m.sqrt(), t, m.sqrt_pinv());
}

Matrix compress_range(const Metric &m, const Matrix &t)
{
  require_member(m, t, "compress");
  return triple(m.to_range(), t, m.from_range());
}

double a_seminorm(const Metric &m, const Matrix &t) { return op_norm(compress_range(m, t)); }

double a_num_radius(const Metric &m, const Matrix &t, const AngleSearch &opts)
{
  return num_radius(compress_range(m, t), opts);
}

double a_spec_radius(const Metric &m, const Matrix &t) { return spec_radius(compress_range(m, t)); }

Matrix a_abs(const Metric &m, const Matrix &t, AbsConvention conv)
{
  return a_abs_fn(m, t, [](double s) { return s; }, conv);
}

Matrix a_abs_fn(const Metric &m, const Matrix &t, const ScalarFn &h, AbsConvention conv)
{
  // psd_fn sees the square, so compose h with the square root.
  const ScalarFn hs = [&h](double lam) { return h(std::sqrt(lam)); };
  if (conv == AbsConvention::Literal)
  {
    check_square(m, t, "a_abs");
    const double tf = t.frobenius_norm();
    return psd_fn(triple(t.adjoint(), m.matrix(), t), hs, tf * tf * m.norm());
  }
  const Matrix c = compress(m, t);
  const double cf = c.frobenius_norm();
  return triple(m.sqrt_pinv(), psd_fn(c.adjoint() * c, hs, cf * cf), m.sqrt());
}

bool is_a_selfadjoint(const Metric &m, const Matrix &t)
{
  check_square(m, t, "is_a_selfadjoint");
  const Matrix at = m.matrix() * t;
  return op_norm(at - at.adjoint()) <= 1e-9 * std::max(1.0, op_norm(at));
}

bool is_a_positive(const Metric &m, const Matrix &t)
{
  if (!is_a_selfadjoint(m, t))
  {
    return false;
  }
  const Matrix at = m.matrix() * t;
  const auto ev = herm_eigvals(at.hermitian_part());
  return ev.empty() || ev.back() >= -1e-9 * op_norm(at);
}

Vector sample_a_unit(const Metric &m, SplitMix64 &rng, double kernel_scale)
{
  if (m.rank() == 0)
  {
    throw Error(ErrorKind::BadConfig, "the zero metric has no A-unit vectors");
  }
  std::normal_distribution<double> nd;
  const std::size_t n = m.dim();
  Vector u;
  double nu = 0.0;
  while (nu < 1e-8)
  {
    Vector g(n);
    for (auto &z : g)
    {
      z = cplx(nd(rng), nd(rng));
    }
    u = m.proj() * std::span<const cplx>(g);
    nu = norm(u);
  }
  Vector x = m.sqrt_pinv() * std::span<const cplx>((1.0 / nu) * u);
  const Matrix &k = m.kernel();
  for (std::size_t c = 0; c < k.cols(); ++c)
  {
    const cplx coef(kernel_scale * nd(rng), kernel_scale * nd(rng));
    for (std::size_t i = 0; i < n; ++i)
    {
      x[i] += coef * k(i, c);
    }
  }
  return x;
}

}  // namespace semihilbert
