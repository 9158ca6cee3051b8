// Random metrics and operators for tests that do not go through instance_gen.
#ifndef SEMIHILBERT_TESTS_FIXTURES_HPP
#define SEMIHILBERT_TESTS_FIXTURES_HPP

#include <optional>
#include <random>

#include "oracles.hpp"
#include "semihilbert/error.hpp"
#include "semihilbert/linalg.hpp"
#include "semihilbert/metric.hpp"

namespace fixture
{

using semihilbert::Matrix;
using semihilbert::Metric;

// A = Q diag(lam) Q* with Q unitary from the eigenvectors of a random Hermitian matrix.
inline Matrix random_metric(std::mt19937_64 &rng, std::size_t n, std::size_t rank)
{
  const Matrix q = semihilbert::herm_eig(oracle::random_hermitian(rng, n)).basis;
  std::uniform_real_distribution<double> ud(0.1, 10.0);
  std::vector<double> lam(n, 0.0);
  for (std::size_t k = 0; k < rank; ++k)
  {
    lam[k] = ud(rng);
  }
  return q * Matrix::diagonal(std::span<const double>(lam)) * q.adjoint();
}

// Random T mapping ker A into ker A: T = G P + K H K* for kernel basis K.
inline Matrix random_member(std::mt19937_64 &rng, const Metric &m)
{
  const std::size_t n = m.dim();
  const Matrix &k = m.kernel();
  return oracle::gaussian_matrix(rng, n, n) * m.proj() +
         k * oracle::gaussian_matrix(rng, k.cols(), k.cols()) * k.adjoint();
}

// Commutes with A: diagonal in A's eigenbasis plus an arbitrary block on ker A.
inline Matrix random_commuting(std::mt19937_64 &rng, const Metric &m)
{
  const std::size_t n = m.dim();
  const Matrix &v = m.eig().basis;
  const Matrix &k = m.kernel();
  const semihilbert::Vector d = oracle::gaussian_vector(rng, n);
  return v * Matrix::diagonal(std::span<const semihilbert::cplx>(d)) * v.adjoint() +
         k * oracle::gaussian_matrix(rng, k.cols(), k.cols()) * k.adjoint();
}

// X, Y diagonal in A's eigenbasis, Y real wherever |x_k|^2 lambda_k > 0.
inline std::pair<Matrix, Matrix> random_intertwining(std::mt19937_64 &rng, const Metric &m)
{
  const std::size_t n = m.dim();
  const Matrix &v = m.eig().basis;
  semihilbert::Vector x = oracle::gaussian_vector(rng, n);
  semihilbert::Vector y = oracle::gaussian_vector(rng, n);
  if (n > 1)
  {
    x[n - 1] = 0.0;
  }
  for (std::size_t k = 0; k < n; ++k)
  {
    if (std::norm(x[k]) * m.eig().eigenvalues[k] > m.tau())
    {
      y[k] = y[k].real();
    }
  }
  return {v * Matrix::diagonal(std::span<const semihilbert::cplx>(x)) * v.adjoint(),
          v * Matrix::diagonal(std::span<const semihilbert::cplx>(y)) * v.adjoint()};
}

template <class F>
std::optional<semihilbert::ErrorKind> kind_of(F &&f)
{
  try
  {
    f();
  }
  catch (const semihilbert::Error &e)
  {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace fixture

#endif
