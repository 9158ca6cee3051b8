// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#include "semihilbert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "semihilbert/error.hpp"

namespace semihilbert
{

namespace
{

constexpr int kMaxSweeps = 64;
constexpr double kEps = std::numeric_limits<double>::epsilon();

Matrix checked_hermitian(const Matrix &h)
{
  if (!h.is_square())
  {
    throw Error(ErrorKind::DimensionMismatch, "eigendecomposition needs a square matrix");
  }
  if (!h.all_finite())
  {
    throw Error(ErrorKind::NotHermitian, "non-finite entry");
  }
  const double asym = (h - h.adjoint()).frobenius_norm();
  if (asym > 1e-10 * std::max(1.0, h.frobenius_norm()))
  {
    throw Error(ErrorKind::NotHermitian, "||H - H*|| = " + std::to_string(asym));
  }
  return h.hermitian_part();
}

// Cyclic Jacobi on a Hermitian matrix, in place. Each rotation is a phase
// change making h(p,q) real followed by a real plane rotation zeroing it.
// When `v` is non-null the rotations are accumulated into it.
void jacobi(Matrix &h, Matrix *v)
{
  const std::size_t n = h.rows();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep)
  {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
    {
      for (std::size_t q = p + 1; q < n; ++q)
      {
        off += std::abs(h(p, q));
      }
    }
    if (off == 0.0)
    {
      return;
    }
    const double thresh = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;

    for (std::size_t p = 0; p + 1 < n; ++p)
    {
      for (std::size_t q = p + 1; q < n; ++q)
      {
        const cplx apq = h(p, q);
        const double mag = std::abs(apq);
        const double hpp = h(p, p).real();
        const double hqq = h(q, q).real();
        const double g = 100.0 * mag;
        if (sweep > 3 && std::abs(hpp) + g == std::abs(hpp) && std::abs(hqq) + g == std::abs(hqq))
        {
          h(p, q) = 0.0;
          h(q, p) = 0.0;
          continue;
        }
        if (mag <= thresh || mag == 0.0)
        {
          continue;
        }

        const double diff = hqq - hpp;
        double t;
        if (std::abs(diff) + g == std::abs(diff))
        {
          t = mag / diff;
        }
        else
        {
          const double theta = 0.5 * diff / mag;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0)
          {
            t = -t;
          }
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx phase = apq / mag;          // e^{i phi}
        const cplx cphase = std::conj(phase);  // e^{-i phi}

        // columns: H <- H G, G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        for (std::size_t k = 0; k < n; ++k)
        {
          const cplx hkp = h(k, p);
          const cplx hkq = h(k, q);
          h(k, p) = c * hkp - s * cphase * hkq;
          h(k, q) = s * hkp + c * cphase * hkq;
        }
        // rows: H <- G* H
        for (std::size_t k = 0; k < n; ++k)
        {
          const cplx hpk = h(p, k);
          const cplx hqk = h(q, k);
          h(p, k) = c * hpk - s * phase * hqk;
          h(q, k) = s * hpk + c * phase * hqk;
        }
        h(p, p) = hpp - t * mag;
        h(q, q) = hqq + t * mag;
        h(p, q) = 0.0;
        h(q, p) = 0.0;

        if (v != nullptr)
        {
          for (std::size_t k = 0; k < n; ++k)
          {
            const cplx vkp = (*v)(k, p);
            const cplx vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * cphase * vkq;
            (*v)(k, q) = s * vkp + c * cphase * vkq;
          }
        }
      }
    }
  }
}

// Jacobi without the Hermitian pre-check, for internal callers that build H_theta
// as an exact Hermitian combination.
std::vector<double> eigvals_trusted(Matrix h)
{
  jacobi(h, nullptr);
  std::vector<double> ev(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i)
  {
    ev[i] = h(i, i).real();
  }
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

double golden_max(const std::function<double(double)> &fn, double lo, double hi, double width, double &best)
{
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = fn(x1);
  double f2 = fn(x2);
  best = std::max({best, f1, f2});
  for (int it = 0; it < 200 && (b - a) > width; ++it)
  {
    if (f1 < f2)
    {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = fn(x2);
      best = std::max(best, f2);
    }
    else
    {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = fn(x1);
      best = std::max(best, f1);
    }
  }
  return best;
}

// Refines the `brackets` largest local maxima of a periodic grid sample.
double refine_grid(const std::vector<double> &vals, const std::function<double(double)> &fn, double period,
                   double lipschitz, const AngleSearch &opts)
{
  const std::size_t g = vals.size();
  const double h = period / static_cast<double>(g);
  double best = *std::max_element(vals.begin(), vals.end());

  std::vector<std::size_t> peaks;
  for (std::size_t j = 0; j < g; ++j)
  {
    const double prev = vals[(j + g - 1) % g];
    const double next = vals[(j + 1) % g];
    if (vals[j] >= prev && vals[j] >= next)
    {
      peaks.push_back(j);
    }
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
  if (peaks.size() > opts.brackets)
  {
    peaks.resize(opts.brackets);
  }

  const double width = std::max(opts.accuracy / std::max(lipschitz, 1e-300), 1e-15 * period);
  for (const std::size_t j : peaks)
  {
    const double center = h * static_cast<double>(j);
    golden_max(fn, center - h, center + h, width, best);
  }
  return best;
}

}  // namespace

HermEigen herm_eig(const Matrix &h)
{
  Matrix work = checked_hermitian(h);
  const std::size_t n = work.rows();
  Matrix v = Matrix::identity(n);
  jacobi(work, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return work(a, a).real() > work(b, b).real(); });

  HermEigen out{Matrix(n, n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k)
  {
    out.eigenvalues[k] = work(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i)
    {
      out.basis(i, k) = v(i, order[k]);
    }
  }
  return out;
}

std::vector<double> herm_eigvals(const Matrix &h) { return eigvals_trusted(checked_hermitian(h)); }

double rank_threshold(std::span<const double> eigenvalues, double tol)
{
  double lmax = 0.0;
  for (const double l : eigenvalues)
  {
    lmax = std::max(lmax, l);
  }
  return tol * static_cast<double>(eigenvalues.size()) * lmax;
}

Matrix pinv(const Matrix &a, double tol)
{
  const HermEigen eig = herm_eig(a);
  const double tau = rank_threshold(eig.eigenvalues, tol);
  return psd_fn(eig, [tau](double t) { return t > tau ? 1.0 / t : 0.0; });
}

Matrix psd_fn(const HermEigen &eig, const ScalarFn &f, double scale)
{
  const std::size_t n = eig.eigenvalues.size();
  for (const double l : eig.eigenvalues)
  {
    scale = std::max(scale, std::abs(l));
  }
  // Rounding noise of the eigensolver around a true zero.
  const double floor = 64.0 * static_cast<double>(std::max<std::size_t>(n, 1)) * kEps * scale;

  std::vector<double> fv(n);
  for (std::size_t k = 0; k < n; ++k)
  {
    double l = eig.eigenvalues[k];
    if (l < -1e-10 * scale)
    {
      throw Error(ErrorKind::NegativeSpectrum, "eigenvalue " + std::to_string(l));
    }
    if (l <= floor)
    {
      l = 0.0;
    }
    fv[k] = f(l);
  }

  Matrix out(n, n);
  const Matrix &u = eig.basis;
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = i; j < n; ++j)
    {
      cplx s{};
      for (std::size_t k = 0; k < n; ++k)
      {
        if (fv[k] != 0.0)
        {
          s += u(i, k) * fv[k] * std::conj(u(j, k));
        }
      }
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

Matrix psd_fn(const Matrix &h, const ScalarFn &f, double scale) { return psd_fn(herm_eig(h), f, scale); }

Matrix herm_fn(const Matrix &h, const ScalarFn &f)
{
  const HermEigen eig = herm_eig(h);
  const std::size_t n = eig.eigenvalues.size();
  Matrix lam(n, n);
  for (std::size_t k = 0; k < n; ++k)
  {
    lam(k, k) = f(eig.eigenvalues[k]);
  }
  return (eig.basis * lam * eig.basis.adjoint()).hermitian_part();
}

double maximize_periodic(const std::function<double(double)> &fn, double period, double lipschitz,
                         const AngleSearch &opts)
{
  // A grid of `opts.grid` points per 2*pi, scaled to the function's period.
  const auto g = std::max<std::size_t>(
      8, static_cast<std::size_t>(std::ceil(static_cast<double>(opts.grid) * period / (2.0 * std::numbers::pi))));
  std::vector<double> vals(g);
  for (std::size_t j = 0; j < g; ++j)
  {
    vals[j] = fn(period * static_cast<double>(j) / static_cast<double>(g));
  }
  return refine_grid(vals, fn, period, lipschitz, opts);
}

double num_radius(const Matrix &m, const AngleSearch &opts)
{
  if (!m.is_square())
  {
    throw Error(ErrorKind::DimensionMismatch, "numerical radius needs a square matrix");
  }
  if (m.empty())
  {
    return 0.0;
  }
  const Matrix madj = m.adjoint();
  const Matrix re = 0.5 * (m + madj);
  const Matrix im = cplx(0.0, 0.5) * (m - madj);
  const std::size_t n = m.rows();

  auto h_theta = [&](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
    {
      for (std::size_t j = i; j < n; ++j)
      {
        const cplx z = c * re(i, j) + s * im(i, j);
        h(i, j) = z;
        h(j, i) = std::conj(z);
      }
      h(i, i) = h(i, i).real();
    }
    return h;
  };
  auto lambda_max = [&](double theta) { return eigvals_trusted(h_theta(theta)).front(); };

  // H_{theta+pi} = -H_theta, so one decomposition yields two grid points.
  const std::size_t g = std::max<std::size_t>(8, opts.grid + (opts.grid % 2));
  const std::size_t half = g / 2;
  std::vector<double> vals(g);
  for (std::size_t j = 0; j < half; ++j)
  {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(g);
    const std::vector<double> ev = eigvals_trusted(h_theta(theta));
    vals[j] = ev.front();
    vals[j + half] = -ev.back();
  }
  const double best = refine_grid(vals, lambda_max, 2.0 * std::numbers::pi, m.frobenius_norm(), opts);
  return std::max(best, 0.0);
}

double op_norm(const Matrix &m)
{
  if (m.empty())
  {
    return 0.0;
  }
  // Scaled first so that M*M cannot overflow.
  const double s = m.max_abs();
  if (s == 0.0)
  {
    return 0.0;
  }
  const Matrix ms = (1.0 / s) * m;
  const Matrix gram = ms.rows() < ms.cols() ? ms * ms.adjoint() : ms.adjoint() * ms;
  return s * std::sqrt(std::max(0.0, eigvals_trusted(gram.hermitian_part()).front()));
}

double spec_radius(const Matrix &m)
{
  if (!m.is_square())
  {
    throw Error(ErrorKind::DimensionMismatch, "spectral radius needs a square matrix");
  }
  // Invariant: M^(2^k) = work * exp(log_scale).
  double nrm = op_norm(m);
  if (nrm == 0.0)
  {
    return 0.0;
  }
  Matrix work = (1.0 / nrm) * m;
  double log_scale = std::log(nrm);
  double estimate = nrm;
  double exponent = 1.0;
  for (int k = 1; k <= 64; ++k)
  {
    work = work * work;
    log_scale *= 2.0;
    exponent *= 2.0;
    nrm = op_norm(work);
    if (nrm == 0.0)
    {
      return 0.0;
    }
    work *= 1.0 / nrm;
    log_scale += std::log(nrm);
    const double next = std::exp(log_scale / exponent);
    const bool done = std::abs(next - estimate) < 1e-14 * std::max(1.0, next);
    estimate = next;
    if (done)
    {
      break;
    }
  }
  return estimate;
}

}  // namespace semihilbert
