// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIHILBERT_CATALOG_HPP
#define SEMIHILBERT_CATALOG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semihilbert/linalg.hpp"
#include "semihilbert/matrix.hpp"
#include "semihilbert/metric.hpp"
#include "semihilbert/record.hpp"

namespace semihilbert
{

/// A pair of nonnegative functions with f(t) g(t) = t on [0, inf).
struct ScalarFnPair
{
  enum class Kind
  {
    Power,     // t^alpha, t^(1 - alpha)
    Rational,  // t / (1 + t), 1 + t
    Log1p,     // log(1 + t), t / log(1 + t)
    Custom,
  };

  Kind kind = Kind::Power;
  double alpha = 0.5;
  std::string name;
  ScalarFn f;
  ScalarFn g;

  static ScalarFnPair power(double alpha);
  static ScalarFnPair rational();
  static ScalarFnPair log1p();
  static ScalarFnPair custom(std::string name, ScalarFn f, ScalarFn g);
};

/// sup |f(t) g(t) - t| over 0 and a log-spaced grid up to t_max.
double pair_defect(const ScalarFnPair &fg, double t_max);

using Operands = std::map<std::string, Matrix>;

struct TheoremInfo
{
  std::string id;
  std::vector<std::string> operands;  // empty for BUZANO; T11.. for the n x n entries
  std::size_t fn_pairs = 0;
  bool power_pair_only = false;  // corollaries fix the function pair to t^rho, t^(1-rho)
  bool sampling = false;         // quantified over vectors
  bool equality = false;
  std::string summary;
};

/// Inequality entries, in registry order.
const std::vector<TheoremInfo> &inequality_registry();
/// Equality entries: LEMMA31_I .. LEMMA31_VII and LEMMA32.
const std::vector<TheoremInfo> &equality_registry();
/// Looks up either registry; throws UnknownTheorem.
const TheoremInfo &theorem_info(std::string_view id);

/// "T11", "T12", ... for an n x n operator matrix.
std::vector<std::string> nxn_names(std::size_t n);

struct EvalOptions
{
  double tol = kCheckTol;
  std::size_t tuples = 2000;  // vector tuples for the sampling entries
  std::uint64_t seed = 0;     // drives the vector sampler
  double theta = 0.0;         // LEMMA31_III only
  AbsConvention abs = AbsConvention::Literal;
};

/// Throws BadParams when the theorem's exponent constraints fail.
void validate_params(std::string_view id, const BoundParams &params);

/// One residual per hypothesis clause, named "member:X", "commute:X",
/// "psd:X" or "intertwine:X,Y". Throws UnknownTheorem.
std::map<std::string, double> hypothesis_residuals(std::string_view id, const Metric &m, const Operands &ops,
                                                   AbsConvention conv = AbsConvention::Literal);

/// Per-clause residuals, each relative to max(1, operand norms).
double member_residual(const Metric &m, const Matrix &t);
double commute_residual(const Metric &m, const Matrix &t);
double psd_residual(const Matrix &t);
/// ||A T - (A T)*|| / max(1, ||A T||)
double selfadjoint_residual(const Metric &m, const Matrix &t);
/// ||X|_A Y - Y# |X|_A|; infinite when Y is outside B_A.
double intertwine_residual(const Metric &m, const Matrix &x, const Matrix &y,
                           AbsConvention conv = AbsConvention::Literal);

/// Acceptance threshold for a named residual.
bool residual_ok(const std::string &name, double residual, const Metric &m);

/// Evaluates a registry entry. Hypothesis failures give verdict skipped.
/// Throws UnknownTheorem, DimensionMismatch, BadParams.
CheckRecord evaluate(std::string_view id, const Metric &m, const Operands &ops, const BoundParams &params,
                     const std::vector<ScalarFnPair> &fns, const EvalOptions &opts = {});

enum class YoungForm
{
  Weighted,   // a^alpha b^(1-alpha) <= alpha a + (1-alpha) b <= [alpha a^r + (1-alpha) b^r]^(1/r)
  Conjugate,  // ab <= a^p/p + b^q/q <= [a^(pr)/p + b^(qr)/q]^(1/r)
};

/// Both links of the chain; lhs, middle (extras["middle"]) and rhs of the record.
CheckRecord scalar_young(double a, double b, const BoundParams &params, YoungForm form, double tol = kCheckTol);

}  // namespace semihilbert

#endif  // SEMIHILBERT_CATALOG_HPP
