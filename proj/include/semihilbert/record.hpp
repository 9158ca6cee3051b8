// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIHILBERT_RECORD_HPP
#define SEMIHILBERT_RECORD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace semihilbert
{

/// Relative tolerance for inequality slack and equality residuals.
inline constexpr double kCheckTol = 1e-8;

/// Exponents shared across the registry. Which fields matter, and which
/// constraints apply, depends on the theorem.
struct BoundParams
{
  double r = 1.0;
  double p = 2.0;  // conjugate pair, 1/p + 1/q = 1
  double q = 2.0;
  double alpha = 0.5;  // in [0, 1]
  double alpha2 = 2.0;  // conjugate pair for the product bound
  double beta2 = 2.0;

  friend bool operator==(const BoundParams &, const BoundParams &) = default;
};

enum class Verdict
{
  Holds,
  Violated,
  Skipped,
};

std::string_view to_string(Verdict v);

struct CheckRecord
{
  std::string theorem_id;
  bool hypotheses_ok = true;
  std::map<std::string, double> hypothesis_residuals;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs; minus the residual for equalities
  BoundParams params;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Skipped;
  std::map<std::string, double> extras;
  std::vector<std::string> notes;
};

/// Sets slack and verdict for an inequality lhs <= rhs.
void settle_inequality(CheckRecord &rec, double tol = kCheckTol);

/// Sets slack = -residual and the verdict for an equality check.
void settle_equality(CheckRecord &rec, double residual, double tol = kCheckTol);

}  // namespace semihilbert

#endif  // SEMIHILBERT_RECORD_HPP
