// Test-side reference computations. Nothing here calls the library's
// eigensolver, compression or maximizers; only Matrix arithmetic is shared.
#ifndef SEMIHILBERT_TESTS_ORACLES_HPP
#define SEMIHILBERT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "semihilbert/matrix.hpp"

namespace oracle
{

using semihilbert::cplx;
using semihilbert::Matrix;
using semihilbert::Vector;
using semihilbert::operator*;
using semihilbert::operator+;
using semihilbert::operator-;

inline Vector gaussian_vector(std::mt19937_64 &rng, std::size_t n)
{
  std::normal_distribution<double> nd;
  Vector v(n);
  for (auto &z : v)
  {
    z = cplx(nd(rng), nd(rng));
  }
  return v;
}

inline Matrix gaussian_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c)
{
  std::normal_distribution<double> nd;
  Matrix m(r, c);
  for (auto &z : m.data())
  {
    z = cplx(nd(rng), nd(rng));
  }
  return m;
}

inline Matrix random_hermitian(std::mt19937_64 &rng, std::size_t n)
{
  const Matrix g = gaussian_matrix(rng, n, n);
  return 0.5 * (g + g.adjoint());
}

// G G* with G of size n x k has rank k almost surely.
inline Matrix random_psd(std::mt19937_64 &rng, std::size_t n, std::size_t rank)
{
  const Matrix g = gaussian_matrix(rng, n, rank);
  return g * g.adjoint();
}

inline double quad(const Matrix &a, const Vector &x, const Vector &y)
{
  return std::abs(semihilbert::inner(a * std::span<const cplx>(x), y));
}

// Maximizes ratio(x) over nonzero x by random sampling, then hill-climbs from
// the best few candidates with an adaptive random step.
inline double sample_max(const std::function<double(const Vector &)> &ratio, std::size_t n, std::mt19937_64 &rng,
                         std::size_t samples = 50000, std::size_t starts = 10)
{
  std::vector<std::pair<double, Vector>> best;
  for (std::size_t s = 0; s < samples; ++s)
  {
    Vector x = gaussian_vector(rng, n);
    const double v = ratio(x);
    if (!std::isfinite(v))
    {
      continue;
    }
    best.emplace_back(v, std::move(x));
    if (best.size() > 4 * starts)
    {
      std::partial_sort(best.begin(), best.begin() + static_cast<long>(starts), best.end(),
                        [](const auto &a, const auto &b) { return a.first > b.first; });
      best.resize(starts);
    }
  }
  std::sort(best.begin(), best.end(), [](const auto &a, const auto &b) { return a.first > b.first; });
  if (best.size() > starts)
  {
    best.resize(starts);
  }
  double top = 0.0;
  for (auto &[v, x] : best)
  {
    // step grows on success and shrinks on failure, about a 1/5 success rate
    double step = 0.5;
    for (int it = 0; it < 20000 && step > 1e-13; ++it)
    {
      const double scale = step * semihilbert::norm(x) / std::sqrt(static_cast<double>(2 * n));
      Vector trial = x + scale * gaussian_vector(rng, n);
      const double tv = ratio(trial);
      if (std::isfinite(tv) && tv > v)
      {
        v = tv;
        x = std::move(trial);
        step = std::min(1.0, step * 1.5);
      }
      else
      {
        step *= 0.9;
      }
    }
    top = std::max(top, v);
  }
  return top;
}

// |<ATx,x>| / <Ax,x> over vectors whose A-norm is well above rounding
// level; for members of B_A the ratio ignores the kernel component anyway.
inline double a_wnum(const Matrix &a, const Matrix &t, std::mt19937_64 &rng, std::size_t samples = 50000,
                     std::size_t starts = 10)
{
  const Matrix at = a * t;
  const double floor = 1e-4 * a.max_abs();
  return sample_max(
      [&](const Vector &x) {
        const double nx = quad(a, x, x);
        if (nx <= floor * semihilbert::norm(x) * semihilbert::norm(x))
        {
          return -1.0;
        }
        return quad(at, x, x) / nx;
      },
      a.rows(), rng, samples, starts);
}

// sqrt(<ATx,Tx> / <Ax,x>).
inline double a_norm(const Matrix &a, const Matrix &t, std::mt19937_64 &rng, std::size_t samples = 50000,
                     std::size_t starts = 10)
{
  const Matrix tat = t.adjoint() * a * t;
  const double floor = 1e-4 * a.max_abs();
  return sample_max(
      [&](const Vector &x) {
        const double nx = quad(a, x, x);
        if (nx <= floor * semihilbert::norm(x) * semihilbert::norm(x))
        {
          return -1.0;
        }
        return std::sqrt(quad(tat, x, x) / nx);
      },
      a.rows(), rng, samples, starts);
}

// Gelfand sequence by plain powers, ||M^k||^(1/k) with the classical norm from
// power iteration on M*M.
inline double power_norm(const Matrix &m, std::mt19937_64 &rng)
{
  const Matrix g = m.adjoint() * m;
  Vector v = gaussian_vector(rng, m.cols());
  double lam = 0.0;
  for (int it = 0; it < 2000; ++it)
  {
    Vector w = g * std::span<const cplx>(v);
    const double nw = semihilbert::norm(w);
    if (nw == 0.0)
    {
      return 0.0;
    }
    lam = nw / semihilbert::norm(v);
    v = (1.0 / nw) * w;
  }
  return std::sqrt(lam);
}

// Number of eigenvalues of the Hermitian h below sigma: negative pivots of
// an unpivoted LDL* of h - sigma I (Sylvester inertia).
inline std::size_t count_below(const Matrix &h, double sigma)
{
  const std::size_t n = h.rows();
  Matrix w = h;
  for (std::size_t i = 0; i < n; ++i)
  {
    w(i, i) -= sigma;
  }
  std::size_t neg = 0;
  for (std::size_t k = 0; k < n; ++k)
  {
    double d = w(k, k).real();
    if (d == 0.0)
    {
      d = -1e-300;
    }
    neg += d < 0.0 ? 1 : 0;
    for (std::size_t i = k + 1; i < n; ++i)
    {
      const cplx l = w(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j)
      {
        w(i, j) -= l * std::conj(w(j, k));
      }
    }
  }
  return neg;
}

// Largest eigenvalue of a Hermitian matrix by bisection on the inertia count.
inline double lambda_max(const Matrix &h)
{
  double hi = h.frobenius_norm() + 1e-300;
  double lo = -hi;
  const std::size_t n = h.rows();
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it)
  {
    const double mid = 0.5 * (lo + hi);
    (count_below(h, mid) == n ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// Operator norm as sqrt(lambda_max(M* M)).
inline double classical_norm(const Matrix &m) { return std::sqrt(std::max(0.0, lambda_max(m.adjoint() * m))); }

// max over theta of lambda_max(Re(e^{i theta} M)): a 720-point grid, then
// golden-section search around the four best grid points.
inline double classical_wnum(const Matrix &m)
{
  const double pi = std::acos(-1.0);
  const auto value = [&](double th) {
    const Matrix r = 0.5 * (std::exp(cplx(0.0, th)) * m + std::exp(cplx(0.0, -th)) * m.adjoint());
    return lambda_max(r);
  };
  const std::size_t grid = 720;
  const double h = 2.0 * pi / grid;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 0; k < grid; ++k)
  {
    pts.emplace_back(value(h * static_cast<double>(k)), h * static_cast<double>(k));
  }
  std::partial_sort(pts.begin(), pts.begin() + 4, pts.end(), [](const auto &a, const auto &b) { return a.first > b.first; });
  double best = pts[0].first;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (std::size_t k = 0; k < 4; ++k)
  {
    double a = pts[k].second - h;
    double b = pts[k].second + h;
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = value(c);
    double fd = value(d);
    while (b - a > 1e-10)
    {
      if (fc > fd)
      {
        b = d;
        d = c;
        fd = fc;
        c = b - g * (b - a);
        fc = value(c);
      }
      else
      {
        a = c;
        c = d;
        fc = fd;
        d = a + g * (b - a);
        fd = value(d);
      }
    }
    best = std::max({best, fc, fd});
  }
  return best;
}

// Eigenvalues from the characteristic polynomial: Faddeev-LeVerrier
// coefficients, Durand-Kerner roots, Newton polish. Small n only.
inline std::vector<cplx> eigenvalues(const Matrix &a)
{
  const std::size_t n = a.rows();
  std::vector<cplx> c(n + 1);  // p(z) = sum c[k] z^k, monic
  c[n] = 1.0;
  Matrix mk(n, n);
  const Matrix eye = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k)
  {
    mk = a * mk + c[n - k + 1] * eye;
    const Matrix am = a * mk;
    cplx tr = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
      tr += am(i, i);
    }
    c[n - k] = -tr / static_cast<double>(k);
  }
  const auto poly = [&](cplx z) {
    cplx v = c[n];
    for (std::size_t k = n; k-- > 0;)
    {
      v = v * z + c[k];
    }
    return v;
  };
  const auto dpoly = [&](cplx z) {
    cplx v = static_cast<double>(n) * c[n];
    for (std::size_t k = n - 1; k >= 1; --k)
    {
      v = v * z + static_cast<double>(k) * c[k];
    }
    return v;
  };
  double bound = 1.0;
  for (std::size_t k = 0; k < n; ++k)
  {
    bound = std::max(bound, 1.0 + std::abs(c[k]));
  }
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k)
  {
    z[k] = 0.5 * bound * std::pow(cplx(0.4, 0.9), static_cast<double>(k));
  }
  for (int it = 0; it < 2000; ++it)
  {
    double move = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
      cplx den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
      {
        den *= i == j ? cplx(1.0) : z[i] - z[j];
      }
      const cplx step = den == cplx(0.0) ? cplx(1e-8) : poly(z[i]) / den;
      z[i] -= step;
      move = std::max(move, std::abs(step));
    }
    if (move < 1e-15 * bound)
    {
      break;
    }
  }
  for (auto &r : z)
  {
    for (int it = 0; it < 5; ++it)
    {
      const cplx d = dpoly(r);
      if (std::abs(d) > 0.0)
      {
        r -= poly(r) / d;
      }
    }
  }
  return z;
}

inline double classical_spec_radius(const Matrix &a)
{
  double r = 0.0;
  for (const cplx &z : eigenvalues(a))
  {
    r = std::max(r, std::abs(z));
  }
  return r;
}

// Gauss-Jordan inverse with partial pivoting.
inline Matrix inverse(const Matrix &a)
{
  const std::size_t n = a.rows();
  Matrix w = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k)
  {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
    {
      piv = std::abs(w(i, k)) > std::abs(w(piv, k)) ? i : piv;
    }
    for (std::size_t j = 0; j < n; ++j)
    {
      std::swap(w(k, j), w(piv, j));
      std::swap(inv(k, j), inv(piv, j));
    }
    const cplx d = w(k, k);
    for (std::size_t j = 0; j < n; ++j)
    {
      w(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i)
    {
      if (i == k)
      {
        continue;
      }
      const cplx f = w(i, k);
      for (std::size_t j = 0; j < n; ++j)
      {
        w(i, j) -= f * w(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// Square root of a positive definite matrix by Denman-Beavers iteration.
inline Matrix sqrt_pd(const Matrix &m)
{
  Matrix y = m;
  Matrix z = Matrix::identity(m.rows());
  for (int it = 0; it < 100; ++it)
  {
    const Matrix yn = 0.5 * (y + inverse(z));
    const Matrix zn = 0.5 * (z + inverse(y));
    const double change = (yn - y).frobenius_norm();
    y = yn;
    z = zn;
    if (change <= 1e-15 * y.frobenius_norm())
    {
      break;
    }
  }
  return 0.5 * (y + y.adjoint());
}

}  // namespace oracle

#endif
