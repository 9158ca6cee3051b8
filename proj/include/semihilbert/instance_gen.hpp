// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIHILBERT_INSTANCE_GEN_HPP
#define SEMIHILBERT_INSTANCE_GEN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semihilbert/catalog.hpp"
#include "semihilbert/metric.hpp"
#include "semihilbert/random.hpp"

namespace semihilbert
{

enum class Family
{
  Free,
  Member,
  Commuting,
  PsdCommuting,
  ASelfadjoint,
  IntertwiningPair,
};

std::string to_string(Family f);
/// Accepts the upper-case tags, e.g. "PSD_COMMUTING". Throws BadFamily.
Family family_from_string(std::string_view s);

struct GenConfig
{
  std::size_t dim = 3;
  std::size_t metric_rank = 3;
  double spread_lo = 0.1;
  double spread_hi = 10.0;
  Family family = Family::Free;  // gen_operand only; gen_instance picks per operand
  std::uint64_t seed = 0;
  std::size_t repeated_eigs = 0;  // extra copies of the largest positive eigenvalue
  std::size_t blocks = 2;         // n for the n x n entries

  /// Throws BadConfig.
  void validate() const;
};

/// A = Q diag(lambda) Q* with Q Haar-distributed; `metric_rank` eigenvalues
/// uniform in the spread, the rest exactly 0.
Metric gen_metric(const GenConfig &config);

/// Haar unitary: Gram-Schmidt (twice) on a complex Gaussian matrix, which
/// leaves R with a positive diagonal.
Matrix haar_unitary(std::size_t n, SplitMix64 &rng);

/// One operator, or two for IntertwiningPair. Residuals of the family's
/// defining relation are checked to 1e-10 before return.
std::vector<Matrix> gen_operand(Family family, const Metric &m, std::uint64_t seed);

struct Instance
{
  Metric metric;
  Operands operands;
  BoundParams params;
  std::vector<ScalarFnPair> fns;
  double theta = 0.0;
  std::uint64_t sample_seed = 0;
  GenConfig config;
};

/// The family each operand of a registry entry is drawn from.
std::vector<std::pair<std::string, Family>> operand_families(std::string_view id, std::size_t blocks = 2);

/// Operands from the right families plus random admissible exponents and
/// function pairs. Throws UnknownTheorem, BadConfig.
Instance gen_instance(std::string_view id, const GenConfig &config);

}  // namespace semihilbert

#endif  // SEMIHILBERT_INSTANCE_GEN_HPP
