// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIHILBERT_CAMPAIGN_HPP
#define SEMIHILBERT_CAMPAIGN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semihilbert/catalog.hpp"
#include "semihilbert/instance_gen.hpp"

namespace semihilbert
{

inline constexpr const char *kToolVersion = "0.1.0";

/// Default tolerance: SEMIHILBERT_TOL if set to a positive number, else kCheckTol.
double default_tolerance();

/// "all" expands to the inequality registry, "lemmas" to the equality registry;
/// anything else must be a single registry id. Throws UnknownTheorem.
std::vector<std::string> expand_theorems(const std::string &selector);

struct CampaignConfig
{
  std::vector<std::string> theorems;
  std::size_t trials = 1000;
  std::size_t max_dim = 4;            // dims cycle 1..max_dim
  std::optional<std::size_t> rank;    // fixed rank (capped at dim); default alternates full / deficient
  std::uint64_t seed = 0;
  double tol = kCheckTol;
  std::size_t tuples = 2000;
  double spread_lo = 0.1;
  double spread_hi = 10.0;
  AbsConvention abs = AbsConvention::Literal;
  std::size_t threads = 0;  // 0: hardware concurrency

  /// Throws BadConfig.
  void validate() const;
};

/// The generator config of one trial: seed = mix(master, trial), dims cycling
/// through 1..max_dim, full and deficient ranks alternating per dim cycle.
GenConfig trial_config(const CampaignConfig &cfg, std::size_t trial);

struct TheoremSummary
{
  std::string theorem_id;
  std::size_t trials = 0;
  std::size_t holds = 0;
  std::size_t skipped = 0;
  std::size_t violated = 0;
  double min_slack = 0.0;  // smallest slack / max(1, |rhs|) over evaluated trials
  std::size_t min_slack_trial = 0;
  std::string min_slack_instance;  // operand fingerprint
  std::size_t full_rank_trials = 0;
  std::size_t deficient_trials = 0;
  std::size_t max_dim_seen = 0;
};

struct CampaignReport
{
  std::string tool_version = kToolVersion;
  std::uint64_t master_seed = 0;
  std::vector<TheoremSummary> theorems;
  double wall_time = 0.0;  // seconds

  std::size_t total_violated() const;
  nlohmann::json to_json(const CampaignConfig &cfg) const;
  /// theorem_id,trials,holds,skipped,violated,min_slack
  std::string to_csv() const;
};

/// FNV-1a over the metric and operand entries, as 16 hex digits.
std::string fingerprint(const Instance &inst);

nlohmann::json record_json(const CheckRecord &rec, const Instance &inst, std::size_t trial);

/// Runs every trial of every selected theorem on a worker pool. Records reach
/// `sink` (may be empty) in theorem then trial order, whatever the pool size.
CampaignReport run_campaign(const CampaignConfig &cfg,
                            const std::function<void(const nlohmann::json &)> &sink = {});

struct WorkedCheck
{
  std::string name;
  std::string theorem_id;
  std::string quantity;  // "lhs" or "rhs"
  double expected = 0.0;
  double actual = 0.0;
  bool ok = false;
};

/// The three worked block-matrix instances, compared within `tol`.
std::vector<WorkedCheck> worked_instances(double tol = 1e-9);

struct Witness
{
  std::size_t trial = 0;
  std::string recipe;
  double rhs_first = 0.0;
  double rhs_second = 0.0;
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::uint64_t seed = 0;
};

struct ExploreResult
{
  std::string first;
  std::string second;
  std::size_t trials_run = 0;
  std::optional<Witness> first_smaller;   // rhs(first) < rhs(second)
  std::optional<Witness> second_smaller;  // rhs(second) < rhs(first)

  bool both() const { return first_smaller && second_smaller; }
  nlohmann::json to_json() const;
};

/// True when both entries take the same operands, so one instance feeds both.
bool comparable(const std::string &first, const std::string &second);

/// Searches seeded instances for a strict witness in each direction, stopping
/// once both are found. Throws BadParams for an incomparable pair.
ExploreResult explore(const std::string &first, const std::string &second, std::size_t trials, std::uint64_t seed,
                      std::size_t max_dim = 4, AbsConvention abs = AbsConvention::Literal);

}  // namespace semihilbert

#endif  // SEMIHILBERT_CAMPAIGN_HPP
