// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#include "semihilbert/block.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "semihilbert/error.hpp"

namespace semihilbert
{

BlockMatrix::BlockMatrix(std::vector<std::vector<Matrix>> grid) : grid_(std::move(grid))
{
  const std::size_t k = grid_.size();
  if (k == 0)
  {
    throw Error(ErrorKind::DimensionMismatch, "empty block grid");
  }
  n_ = grid_[0][0].rows();
  for (const auto &row : grid_)
  {
    if (row.size() != k)
    {
      throw Error(ErrorKind::DimensionMismatch, "block grid must be square");
    }
    for (const auto &b : row)
    {
      if (b.rows() != n_ || b.cols() != n_)
      {
        throw Error(ErrorKind::DimensionMismatch, "blocks must all be " + std::to_string(n_) + "x" +
                                                      std::to_string(n_));
      }
    }
  }
  assembled_ = Matrix(k * n_, k * n_);
  for (std::size_t i = 0; i < k; ++i)
  {
    for (std::size_t j = 0; j < k; ++j)
    {
      for (std::size_t a = 0; a < n_; ++a)
      {
        for (std::size_t b = 0; b < n_; ++b)
        {
          assembled_(i * n_ + a, j * n_ + b) = grid_[i][j](a, b);
        }
      }
    }
  }
}

BlockMatrix BlockMatrix::split(const Matrix &m, std::size_t k)
{
  if (k == 0 || !m.is_square() || m.rows() % k != 0)
  {
    throw Error(ErrorKind::DimensionMismatch, "cannot split into equal square blocks");
  }
  const std::size_t n = m.rows() / k;
  std::vector<std::vector<Matrix>> grid(k, std::vector<Matrix>(k, Matrix(n, n)));
  for (std::size_t i = 0; i < k; ++i)
  {
    for (std::size_t j = 0; j < k; ++j)
    {
      for (std::size_t a = 0; a < n; ++a)
      {
        for (std::size_t b = 0; b < n; ++b)
        {
          grid[i][j](a, b) = m(i * n + a, j * n + b);
        }
      }
    }
  }
  return BlockMatrix(std::move(grid));
}

BlockMatrix block2(const Matrix &x, const Matrix &y, const Matrix &z, const Matrix &w)
{
  return BlockMatrix({{x, y}, {z, w}});
}

BlockMatrix block_diag(const Matrix &x, const Matrix &w)
{
  const Matrix o(x.rows(), x.cols());
  return block2(x, o, o, w);
}

BlockMatrix block_offdiag(const Matrix &x, const Matrix &y)
{
  const Matrix o(x.rows(), x.cols());
  return block2(o, x, y, o);
}

BlockMatrix blockn(std::vector<std::vector<Matrix>> grid) { return BlockMatrix(std::move(grid)); }

std::string block_identity_id(BlockIdentity part)
{
  static const char *names[] = {"I", "II", "III", "IV", "V", "VI", "VII"};
  return std::string("LEMMA31_") + names[static_cast<int>(part)];
}

CheckRecord block_identity_check(const Metric &a, BlockIdentity part, const Matrix &x, const Matrix &y, const Matrix &z,
                          const Matrix &w, double theta, double tol)
{
  CheckRecord rec;
  rec.theorem_id = block_identity_id(part);
  std::vector<const Matrix *> operands{&x, &y};
  if (part == BlockIdentity::VII)
  {
    operands.push_back(&z);
    operands.push_back(&w);
  }
  for (const Matrix *op : operands)
  {
    const ABoundedCert cert = in_b_a(a, *op);
    if (!cert.member)
    {
      throw Error(ErrorKind::NotAMember, rec.theorem_id + ": operand outside B_A");
    }
  }
  const Metric b = Metric::block_diagonal(a, 2);
  double residual = 0.0;

  switch (part)
  {
  case BlockIdentity::I:
    rec.lhs = a_num_radius(b, block_diag(x, y).assembled());
    rec.rhs = std::max(a_num_radius(a, x), a_num_radius(a, y));
    residual = std::abs(rec.lhs - rec.rhs);
    break;
  case BlockIdentity::II:
    rec.lhs = a_num_radius(b, block_offdiag(x, y).assembled());
    rec.rhs = a_num_radius(b, block_offdiag(y, x).assembled());
    residual = std::abs(rec.lhs - rec.rhs);
    break;
  case BlockIdentity::III:
    if (!std::isfinite(theta))
    {
      throw Error(ErrorKind::BadParams, "theta must be finite");
    }
    rec.lhs = a_num_radius(b, block_offdiag(x, std::polar(1.0, theta) * y).assembled());
    rec.rhs = a_num_radius(b, block_offdiag(x, y).assembled());
    rec.extras["theta"] = theta;
    residual = std::abs(rec.lhs - rec.rhs);
    break;
  case BlockIdentity::IV:
  {
    rec.lhs = a_num_radius(b, block2(x, y, y, x).assembled());
    rec.rhs = std::max(a_num_radius(a, x + y), a_num_radius(a, x - y));
    const double pl = a_num_radius(b, block_offdiag(y, y).assembled());
    const double pr = a_num_radius(a, y);
    const double particular = std::abs(pl - pr);
    rec.extras["particular_lhs"] = pl;
    rec.extras["particular_rhs"] = pr;
    residual = std::max(std::abs(rec.lhs - rec.rhs), particular);
    break;
  }
  case BlockIdentity::V:
  {
    rec.lhs = a_num_radius(b, block_offdiag(x, y).assembled());
    // ||e^{it} X + e^{-it} Y#||_A = ||X~ + e^{-2it} Y#~||, which has period pi.
    const Matrix xc = compress(a, x);
    const Matrix yc = compress(a, sharp(a, y));
    const auto fn = [&](double t) { return op_norm(xc + std::polar(1.0, -2.0 * t) * yc); };
    const double lip = 2.0 * (xc.frobenius_norm() + yc.frobenius_norm());
    rec.rhs = 0.5 * maximize_periodic(fn, std::numbers::pi, std::max(lip, 1e-300));
    residual = std::abs(rec.lhs - rec.rhs);
    break;
  }
  case BlockIdentity::VI:
  {
    rec.lhs = a_seminorm(b, block_diag(x, y).assembled());
    const double off = a_seminorm(b, block_offdiag(x, y).assembled());
    rec.rhs = std::max(a_seminorm(a, x), a_seminorm(a, y));
    rec.extras["offdiag_norm"] = off;
    residual = std::max(std::abs(rec.lhs - rec.rhs), std::abs(off - rec.rhs));
    break;
  }
  case BlockIdentity::VII:
  {
    const Matrix lhs = sharp(b, block2(x, y, z, w).assembled());
    const Matrix rhs = block2(sharp(a, x), sharp(a, z), sharp(a, y), sharp(a, w)).assembled();
    rec.lhs = lhs.max_abs();
    rec.rhs = rhs.max_abs();
    residual = max_abs_diff(lhs, rhs);
    break;
  }
  }
  settle_equality(rec, residual, tol);
  return rec;
}

CheckRecord offdiag_abs_check(const Metric &a, const Matrix &x, const Matrix &y, double tol, AbsConvention conv)
{
  CheckRecord rec;
  rec.theorem_id = "LEMMA32";
  const Metric b = Metric::block_diagonal(a, 2);
  const Matrix lhs = a_abs(b, block_offdiag(x, y).assembled(), conv);
  const Matrix rhs = block_diag(a_abs(a, y, conv), a_abs(a, x, conv)).assembled();
  rec.lhs = lhs.max_abs();
  rec.rhs = rhs.max_abs();
  settle_equality(rec, max_abs_diff(lhs, rhs), tol);
  return rec;
}

}  // namespace semihilbert
