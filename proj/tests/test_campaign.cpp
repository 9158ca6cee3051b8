#include <cstdlib>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "semihilbert/campaign.hpp"

using namespace semihilbert;
using fixture::kind_of;

namespace
{

CampaignConfig small(std::vector<std::string> ids, std::size_t trials, std::size_t dim, std::uint64_t seed)
{
  CampaignConfig c;
  c.theorems = std::move(ids);
  c.trials = trials;
  c.max_dim = dim;
  c.seed = seed;
  c.tuples = 200;
  return c;
}

}  // namespace

TEST_CASE("equivalence campaign example")
{
  const CampaignReport r = run_campaign(small({"EQUIV"}, 100, 3, 7));
  REQUIRE(r.theorems.size() == 1);
  CHECK(r.theorems[0].holds == 100);
  CHECK(r.theorems[0].violated == 0);
  CHECK(r.total_violated() == 0);
  CHECK(r.theorems[0].max_dim_seen == 3);
}

TEST_CASE("trial configs cycle dims and ranks")
{
  CampaignConfig c = small({"EQUIV"}, 16, 4, 3);
  std::set<std::size_t> dims;
  std::size_t deficient = 0;
  bool repeated = false;
  for (std::size_t t = 0; t < 16; ++t)
  {
    const GenConfig g = trial_config(c, t);
    CHECK(g.dim == 1 + t % 4);
    CHECK(g.metric_rank >= 1);
    CHECK(g.metric_rank <= g.dim);
    CHECK_NOTHROW(g.validate());
    dims.insert(g.dim);
    deficient += g.metric_rank < g.dim ? 1 : 0;
    repeated = repeated || g.repeated_eigs > 0;
  }
  CHECK(dims.size() == 4);
  CHECK(deficient == 6);  // dims 2..4 of cycles 1 and 3
  CHECK(repeated);

  c.rank = 2;
  CHECK(trial_config(c, 0).metric_rank == 1);
  CHECK(trial_config(c, 3).metric_rank == 2);
  CHECK(trial_config(c, 5).seed != trial_config(c, 6).seed);
}

TEST_CASE("summary counts add up on every entry")
{
  const CampaignConfig c = small(expand_theorems("all"), 8, 3, 11);
  const CampaignReport r = run_campaign(c);
  CHECK(r.theorems.size() == inequality_registry().size());
  for (const auto &t : r.theorems)
  {
    CHECK(t.trials == 8);
    CHECK(t.trials == t.holds + t.skipped + t.violated);
    CHECK(t.full_rank_trials + t.deficient_trials == t.trials);
    CHECK(t.min_slack_instance.size() == 16);
  }
  const auto j = r.to_json(c);
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(j["master_seed"] == 11);
  CHECK(j["theorems"].size() == r.theorems.size());
  const std::string csv = r.to_csv();
  CHECK(csv.rfind("theorem_id,trials,holds,skipped,violated,min_slack\n", 0) == 0);
}

TEST_CASE("replaying a seed reproduces every record")
{
  const CampaignConfig c = small({"MCCARTHY", "FULL_W_2", "BUZANO", "LEMMA31_III"}, 12, 4, 99);
  std::vector<std::string> first;
  std::vector<std::string> second;
  run_campaign(c, [&](const nlohmann::json &j) { first.push_back(j.dump()); });
  run_campaign(c, [&](const nlohmann::json &j) { second.push_back(j.dump()); });
  REQUIRE(first.size() == 48);
  CHECK(first == second);

  CampaignConfig other = c;
  other.seed = 100;
  std::vector<std::string> third;
  run_campaign(other, [&](const nlohmann::json &j) { third.push_back(j.dump()); });
  CHECK(third != first);

  CampaignConfig serial = c;
  serial.threads = 1;
  CampaignConfig pooled = c;
  pooled.threads = 5;
  std::vector<std::string> one;
  std::vector<std::string> many;
  run_campaign(serial, [&](const nlohmann::json &j) { one.push_back(j.dump()); });
  run_campaign(pooled, [&](const nlohmann::json &j) { many.push_back(j.dump()); });
  CHECK(one == first);
  CHECK(many == first);
}

TEST_CASE("record layout")
{
  GenConfig g;
  g.dim = 2;
  g.metric_rank = 1;
  g.seed = 5;
  const Instance inst = gen_instance("OFFDIAG_FG", g);
  const CheckRecord rec = evaluate("OFFDIAG_FG", inst.metric, inst.operands, inst.params, inst.fns);
  const auto j = record_json(rec, inst, 17);
  CHECK(j["trial"] == 17);
  CHECK(j["theorem_id"] == "OFFDIAG_FG");
  CHECK(j["config"]["metric_rank"] == 1);
  CHECK(j["config"]["seed"] == 5);
  CHECK(j["fingerprint"] == fingerprint(inst));
  CHECK(j.contains("hypothesis_residuals"));
  CHECK(j["fns"].size() == 1);

  Instance moved = inst;
  moved.operands.begin()->second(0, 0) += 1e-12;
  CHECK(fingerprint(moved) != fingerprint(inst));
}

TEST_CASE("selectors and config errors")
{
  CHECK(expand_theorems("lemmas").size() == equality_registry().size());
  CHECK(expand_theorems("PROD_XY") == std::vector<std::string>{"PROD_XY"});
  CHECK(kind_of([] { expand_theorems("NOPE"); }) == ErrorKind::UnknownTheorem);

  CHECK(kind_of([] { small({"EQUIV"}, 1, 0, 0).validate(); }) == ErrorKind::BadConfig);
  CHECK(kind_of([] { small({"EQUIV"}, 0, 2, 0).validate(); }) == ErrorKind::BadConfig);
  CHECK(kind_of([] { small({}, 1, 2, 0).validate(); }) == ErrorKind::BadConfig);
  CampaignConfig c = small({"EQUIV"}, 1, 2, 0);
  c.rank = 3;
  CHECK(kind_of([&] { c.validate(); }) == ErrorKind::BadConfig);
  c.rank.reset();
  c.tol = 0.0;
  CHECK(kind_of([&] { run_campaign(c); }) == ErrorKind::BadConfig);
}

TEST_CASE("tolerance from the environment")
{
  ::setenv("SEMIHILBERT_TOL", "1e-6", 1);
  CHECK(default_tolerance() == 1e-6);
  ::setenv("SEMIHILBERT_TOL", "junk", 1);
  CHECK(default_tolerance() == kCheckTol);
  ::unsetenv("SEMIHILBERT_TOL");
  CHECK(default_tolerance() == kCheckTol);
}

TEST_CASE("worked instances")
{
  const auto checks = worked_instances();
  REQUIRE(checks.size() == 6);
  for (const auto &c : checks)
  {
    CHECK_MESSAGE(c.ok, c.name, " ", c.quantity, " ", c.actual);
  }
  CHECK(checks[4].actual == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(checks[5].actual == doctest::Approx(1.125).epsilon(1e-12));
}

TEST_CASE("explore")
{
  CHECK(comparable("FULL_W_1", "FULL_W_2"));
  CHECK(comparable("NXN_S", "NXN_R"));
  CHECK_FALSE(comparable("FULL_W_1", "PROD_XY"));
  CHECK_FALSE(comparable("BUZANO", "BUZANO"));
  CHECK_FALSE(comparable("LEMMA31_I", "LEMMA31_II"));
  CHECK(kind_of([] { explore("FULL_W_1", "MCCARTHY", 10, 0); }) == ErrorKind::BadParams);

  for (const auto &[a, b] : std::vector<std::pair<std::string, std::string>>{
           {"FULL_W_1", "FULL_W_2"}, {"OFFDIAG_FG", "OFFDIAG_2FG"}, {"NXN_S", "NXN_R"}})
  {
    const ExploreResult r = explore(a, b, 300, 5);
    CHECK_MESSAGE(r.both(), a, " ", b);
    if (r.both())
    {
      CHECK(r.first_smaller->rhs_first < r.first_smaller->rhs_second);
      CHECK(r.second_smaller->rhs_second < r.second_smaller->rhs_first);
    }
    CHECK(r.trials_run <= 300);
    CHECK(r.to_json()["both_directions"] == r.both());
  }

  // the worked instance seeds the FULL_W_2 < FULL_W_1 direction
  const ExploreResult w = explore("FULL_W_1", "FULL_W_2", 1, 0);
  REQUIRE(w.second_smaller);
  CHECK(w.second_smaller->rhs_first == doctest::Approx(1.25));
  CHECK(w.second_smaller->rhs_second == doctest::Approx(1.125));
  CHECK_FALSE(w.first_smaller);
  CHECK(w.to_json()["first_smaller"] == "NOT-FOUND");
}
