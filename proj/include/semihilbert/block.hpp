// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIHILBERT_BLOCK_HPP
#define SEMIHILBERT_BLOCK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "semihilbert/matrix.hpp"
#include "semihilbert/metric.hpp"
#include "semihilbert/record.hpp"

namespace semihilbert
{

/// k x k grid of n x n blocks together with the assembled (kn) x (kn) matrix.
class BlockMatrix
{
public:
  /// Throws DimensionMismatch unless the grid is square and every block is n x n.
  explicit BlockMatrix(std::vector<std::vector<Matrix>> grid);

  std::size_t blocks() const noexcept { return grid_.size(); }
  std::size_t block_dim() const noexcept { return n_; }
  const Matrix &block(std::size_t i, std::size_t j) const { return grid_[i][j]; }
  const Matrix &assembled() const noexcept { return assembled_; }

  /// Splits a (kn) x (kn) matrix back into blocks.
  static BlockMatrix split(const Matrix &m, std::size_t k);

private:
  std::vector<std::vector<Matrix>> grid_;
  std::size_t n_ = 0;
  Matrix assembled_;
};

/// [[X, Y], [Z, W]]
BlockMatrix block2(const Matrix &x, const Matrix &y, const Matrix &z, const Matrix &w);
/// [[X, 0], [0, W]]
BlockMatrix block_diag(const Matrix &x, const Matrix &w);
/// [[0, X], [Y, 0]]
BlockMatrix block_offdiag(const Matrix &x, const Matrix &y);
BlockMatrix blockn(std::vector<std::vector<Matrix>> grid);

/// The metric diag(A, ..., A).
struct BlockMetric
{
  BlockMetric(const Metric &base_metric, std::size_t k)
    : base(base_metric), copies(k), lifted(Metric::block_diagonal(base_metric, k))
  {
  }

  Metric base;
  std::size_t copies;
  Metric lifted;
};

enum class BlockIdentity
{
  I,
  II,
  III,
  IV,
  V,
  VI,
  VII,
};

/// "LEMMA31_I" ... "LEMMA31_VII".
std::string block_identity_id(BlockIdentity part);

/// Evaluates one part of the block identities under B = diag(A, A).
/// Z and W are read by part (vii) only, theta by part (iii) only.
/// Throws NotAMember when an operand is outside B_A, BadParams for a non-finite theta.
CheckRecord block_identity_check(const Metric &a, BlockIdentity part, const Matrix &x, const Matrix &y, const Matrix &z = {},
                          const Matrix &w = {}, double theta = 0.0, double tol = kCheckTol);

/// |[[0, X], [Y, 0]]|_B against diag(|Y|_A, |X|_A), entrywise.
CheckRecord offdiag_abs_check(const Metric &a, const Matrix &x, const Matrix &y, double tol = kCheckTol,
                          AbsConvention conv = AbsConvention::Literal);

}  // namespace semihilbert

#endif  // SEMIHILBERT_BLOCK_HPP
