// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#include "semihilbert/record.hpp"

#include <algorithm>
#include <cmath>

namespace semihilbert
{

std::string_view to_string(Verdict v)
{
  switch (v)
  {
  case Verdict::Holds:
    return "holds";
  case Verdict::Violated:
    return "violated";
  case Verdict::Skipped:
    return "skipped";
  }
  return "unknown";
}

void settle_inequality(CheckRecord &rec, double tol)
{
  rec.slack = rec.rhs - rec.lhs;
  if (!rec.hypotheses_ok)
  {
    rec.verdict = Verdict::Skipped;
    return;
  }
  const bool ok = rec.slack >= -tol * std::max(1.0, std::abs(rec.rhs)) && std::isfinite(rec.slack);
  rec.verdict = ok ? Verdict::Holds : Verdict::Violated;
}

void settle_equality(CheckRecord &rec, double residual, double tol)
{
  rec.slack = -residual;
  rec.extras["residual"] = residual;
  if (!rec.hypotheses_ok)
  {
    rec.verdict = Verdict::Skipped;
    return;
  }
  const double scale = std::max({1.0, std::abs(rec.lhs), std::abs(rec.rhs)});
  rec.verdict = residual <= tol * scale ? Verdict::Holds : Verdict::Violated;
}

}  // namespace semihilbert
