// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#include "semihilbert/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "semihilbert/error.hpp"

namespace semihilbert
{

namespace
{

using nlohmann::json;

json params_json(const BoundParams &p)
{
  return {{"r", p.r}, {"p", p.p}, {"q", p.q}, {"alpha", p.alpha}, {"alpha2", p.alpha2}, {"beta2", p.beta2}};
}

json gen_config_json(const GenConfig &g)
{
  return {{"dim", g.dim},
          {"metric_rank", g.metric_rank},
          {"eigen_spread", {g.spread_lo, g.spread_hi}},
          {"seed", g.seed},
          {"repeated_eigs", g.repeated_eigs},
          {"blocks", g.blocks}};
}

std::string convention_name(AbsConvention c) { return c == AbsConvention::Literal ? "metric" : "range"; }

double normalized_slack(const CheckRecord &rec) { return rec.slack / std::max(1.0, std::abs(rec.rhs)); }

void fnv(std::uint64_t &h, const Matrix &m)
{
  for (const cplx &z : m.data())
  {
    const double parts[2] = {z.real(), z.imag()};
    unsigned char bytes[sizeof(parts)];
    std::memcpy(bytes, parts, sizeof(parts));
    for (const unsigned char b : bytes)
    {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  }
}

bool strictly_below(double a, double b) { return a < b - 1e-9 * std::max(1.0, std::abs(b)); }

}  // namespace

double default_tolerance()
{
  if (const char *env = std::getenv("SEMIHILBERT_TOL"))
  {
    char *end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v))
    {
      return v;
    }
  }
  return kCheckTol;
}

std::vector<std::string> expand_theorems(const std::string &selector)
{
  std::vector<std::string> out;
  if (selector == "all" || selector == "lemmas")
  {
    for (const auto &t : selector == "all" ? inequality_registry() : equality_registry())
    {
      out.push_back(t.id);
    }
    return out;
  }
  out.push_back(theorem_info(selector).id);
  return out;
}

void CampaignConfig::validate() const
{
  if (theorems.empty())
  {
    throw Error(ErrorKind::BadConfig, "no theorems selected");
  }
  if (trials == 0)
  {
    throw Error(ErrorKind::BadConfig, "trials must be >= 1");
  }
  if (max_dim < 1 || max_dim > 8)
  {
    throw Error(ErrorKind::BadConfig, "dim must lie in 1..8");
  }
  if (rank && (*rank < 1 || *rank > max_dim))
  {
    throw Error(ErrorKind::BadConfig, "rank must lie in 1..dim");
  }
  if (!(tol > 0.0) || !std::isfinite(tol))
  {
    throw Error(ErrorKind::BadConfig, "tolerance must be positive");
  }
  if (tuples == 0)
  {
    throw Error(ErrorKind::BadConfig, "tuples must be >= 1");
  }
  if (!(spread_lo > 0.0) || !(spread_hi >= spread_lo) || !std::isfinite(spread_hi))
  {
    throw Error(ErrorKind::BadConfig, "eigen spread must be a positive interval");
  }
}

GenConfig trial_config(const CampaignConfig &cfg, std::size_t trial)
{
  GenConfig g;
  g.dim = 1 + trial % cfg.max_dim;
  g.seed = mix(cfg.seed, trial);
  g.spread_lo = cfg.spread_lo;
  g.spread_hi = cfg.spread_hi;
  const std::size_t cycle = trial / cfg.max_dim;
  if (cfg.rank)
  {
    g.metric_rank = std::min(*cfg.rank, g.dim);
  }
  else if (cycle % 2 == 0 || g.dim == 1)
  {
    g.metric_rank = g.dim;
  }
  else
  {
    g.metric_rank = 1 + static_cast<std::size_t>(g.seed % (g.dim - 1));
  }
  // every other pair of cycles repeats an eigenvalue, for non-diagonal commutants
  if (g.metric_rank >= 2 && cycle % 4 >= 2)
  {
    g.repeated_eigs = 1;
  }
  g.blocks = 2 + static_cast<std::size_t>((g.seed >> 8U) % 2);
  return g;
}

std::size_t CampaignReport::total_violated() const
{
  std::size_t v = 0;
  for (const auto &t : theorems)
  {
    v += t.violated;
  }
  return v;
}

json CampaignReport::to_json(const CampaignConfig &cfg) const
{
  json per = json::array();
  for (const auto &t : theorems)
  {
    per.push_back({{"theorem_id", t.theorem_id},
                   {"trials", t.trials},
                   {"holds", t.holds},
                   {"skipped", t.skipped},
                   {"violated", t.violated},
                   {"min_slack", t.min_slack},
                   {"min_slack_trial", t.min_slack_trial},
                   {"min_slack_instance", t.min_slack_instance},
                   {"full_rank_trials", t.full_rank_trials},
                   {"deficient_trials", t.deficient_trials},
                   {"max_dim_seen", t.max_dim_seen}});
  }
  return {{"tool_version", tool_version},
          {"master_seed", master_seed},
          {"trials", cfg.trials},
          {"dim", cfg.max_dim},
          {"rank", cfg.rank ? json(*cfg.rank) : json(nullptr)},
          {"tol", cfg.tol},
          {"tuples", cfg.tuples},
          {"abs_convention", convention_name(cfg.abs)},
          {"eigen_spread", {cfg.spread_lo, cfg.spread_hi}},
          {"theorems", per},
          {"violated", total_violated()},
          {"wall_time", wall_time}};
}

std::string CampaignReport::to_csv() const
{
  std::ostringstream out;
  out << "theorem_id,trials,holds,skipped,violated,min_slack\n";
  char buf[64];
  for (const auto &t : theorems)
  {
    std::snprintf(buf, sizeof(buf), "%.15g", t.min_slack);
    out << t.theorem_id << ',' << t.trials << ',' << t.holds << ',' << t.skipped << ',' << t.violated << ',' << buf
        << '\n';
  }
  return out.str();
}

std::string fingerprint(const Instance &inst)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv(h, inst.metric.matrix());
  for (const auto &[name, t] : inst.operands)
  {
    for (const char c : name)
    {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    fnv(h, t);
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json record_json(const CheckRecord &rec, const Instance &inst, std::size_t trial)
{
  json fns = json::array();
  for (const auto &fg : inst.fns)
  {
    fns.push_back(fg.name);
  }
  return {{"trial", trial},
          {"theorem_id", rec.theorem_id},
          {"verdict", std::string(to_string(rec.verdict))},
          {"hypotheses_ok", rec.hypotheses_ok},
          {"hypothesis_residuals", rec.hypothesis_residuals},
          {"lhs", rec.lhs},
          {"rhs", rec.rhs},
          {"slack", rec.slack},
          {"params", params_json(rec.params)},
          {"fns", fns},
          {"theta", inst.theta},
          {"sample_seed", inst.sample_seed},
          {"config", gen_config_json(inst.config)},
          {"fingerprint", fingerprint(inst)},
          {"extras", rec.extras},
          {"notes", rec.notes}};
}

namespace
{

struct TrialOutcome
{
  Verdict verdict = Verdict::Skipped;
  double normalized = 0.0;
  bool full_rank = true;
  std::size_t dim = 0;
  std::string fingerprint;
  json record;
};

TrialOutcome run_trial(const CampaignConfig &cfg, const std::string &id, std::size_t trial, bool keep_record)
{
  const GenConfig g = trial_config(cfg, trial);
  const Instance inst = gen_instance(id, g);
  EvalOptions opts;
  opts.tol = cfg.tol;
  opts.tuples = cfg.tuples;
  opts.seed = inst.sample_seed;
  opts.theta = inst.theta;
  opts.abs = cfg.abs;
  CheckRecord rec;
  try
  {
    rec = evaluate(id, inst.metric, inst.operands, inst.params, inst.fns, opts);
  }
  catch (const Error &e)
  {
    // an evaluation error on a generated instance counts against the entry
    rec.theorem_id = id;
    rec.params = inst.params;
    rec.hypotheses_ok = true;
    rec.verdict = Verdict::Violated;
    rec.slack = -std::numeric_limits<double>::infinity();
    rec.notes.push_back(std::string("error: ") + e.what());
  }
  TrialOutcome out;
  out.verdict = rec.verdict;
  out.normalized = normalized_slack(rec);
  out.full_rank = inst.metric.full_rank();
  out.dim = g.dim;
  out.fingerprint = fingerprint(inst);
  if (keep_record)
  {
    out.record = record_json(rec, inst, trial);
  }
  return out;
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig &cfg, const std::function<void(const json &)> &sink)
{
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.master_seed = cfg.seed;
  const std::size_t workers =
      std::max<std::size_t>(1, cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency());
  for (const auto &requested : cfg.theorems)
  {
    const std::string id = theorem_info(requested).id;
    std::vector<TrialOutcome> outcomes(cfg.trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto work = [&] {
      for (std::size_t t = next++; t < cfg.trials; t = next++)
      {
        try
        {
          outcomes[t] = run_trial(cfg, id, t, static_cast<bool>(sink));
        }
        catch (...)
        {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure)
          {
            failure = std::current_exception();
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < std::min(workers, cfg.trials); ++w)
    {
      pool.emplace_back(work);
    }
    work();
    for (auto &th : pool)
    {
      th.join();
    }
    if (failure)
    {
      std::rethrow_exception(failure);
    }

    TheoremSummary sum;
    sum.theorem_id = id;
    sum.min_slack = std::numeric_limits<double>::infinity();
    for (std::size_t trial = 0; trial < cfg.trials; ++trial)
    {
      TrialOutcome &o = outcomes[trial];
      ++sum.trials;
      sum.max_dim_seen = std::max(sum.max_dim_seen, o.dim);
      ++(o.full_rank ? sum.full_rank_trials : sum.deficient_trials);
      switch (o.verdict)
      {
      case Verdict::Holds:
        ++sum.holds;
        break;
      case Verdict::Skipped:
        ++sum.skipped;
        break;
      case Verdict::Violated:
        ++sum.violated;
        break;
      }
      if (o.verdict != Verdict::Skipped && o.normalized < sum.min_slack)
      {
        sum.min_slack = o.normalized;
        sum.min_slack_trial = trial;
        sum.min_slack_instance = o.fingerprint;
      }
      if (sink)
      {
        sink(o.record);
      }
    }
    report.theorems.push_back(std::move(sum));
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<WorkedCheck> worked_instances(double tol)
{
  const Metric id2 = Metric::identity(2);
  const Metric id1 = Metric::identity(1);
  const Matrix o(2, 2);
  const Matrix n{{0, 1}, {0, 0}};
  const CheckRecord w1 = evaluate("FULL_W_1", id2, {{"X", o}, {"Y", n}, {"Z", n}, {"W", o}}, {}, {});
  const CheckRecord w2 = evaluate("FULL_W_2", id2, {{"X", o}, {"Y", n}, {"Z", o}, {"W", o}}, {}, {});
  const Operands inc{{"X", Matrix{{0.5}}}, {"Y", Matrix{{1.0}}}, {"Z", Matrix{{0.0}}}, {"W", Matrix{{0.0}}}};
  const CheckRecord i1 = evaluate("FULL_W_1", id1, inc, {}, {});
  const CheckRecord i2 = evaluate("FULL_W_2", id1, inc, {}, {});

  std::vector<WorkedCheck> out{
      {"nilpotent Y=Z instance", "FULL_W_1", "rhs", 0.75, w1.rhs},
      {"nilpotent Y=Z instance", "FULL_W_1", "lhs", 0.25, w1.lhs},
      {"nilpotent Y instance", "FULL_W_2", "rhs", 0.75, w2.rhs},
      {"nilpotent Y instance", "FULL_W_2", "lhs", 0.25, w2.lhs},
      {"incomparability instance", "FULL_W_1", "rhs", 10.0 / 8.0, i1.rhs},
      {"incomparability instance", "FULL_W_2", "rhs", 9.0 / 8.0, i2.rhs},
  };
  for (auto &c : out)
  {
    c.ok = std::abs(c.actual - c.expected) <= tol;
  }
  return out;
}

json ExploreResult::to_json() const
{
  auto w = [](const std::optional<Witness> &x) -> json {
    if (!x)
    {
      return "NOT-FOUND";
    }
    return {{"trial", x->trial},   {"recipe", x->recipe}, {"rhs_first", x->rhs_first}, {"rhs_second", x->rhs_second},
            {"dim", x->dim},       {"rank", x->rank},     {"seed", x->seed}};
  };
  return {{"pair", {first, second}},
          {"trials_run", trials_run},
          {"first_smaller", w(first_smaller)},
          {"second_smaller", w(second_smaller)},
          {"both_directions", both()}};
}

bool comparable(const std::string &first, const std::string &second)
{
  const TheoremInfo &a = theorem_info(first);
  const TheoremInfo &b = theorem_info(second);
  if (a.equality || b.equality || a.sampling || b.sampling || a.id == b.id)
  {
    return false;
  }
  return a.operands == b.operands;
}

namespace
{

struct Trial
{
  std::string recipe = "generated";
  Operands ops;
  Metric metric = Metric::identity(1);
  BoundParams params_first;
  BoundParams params_second;
  std::vector<ScalarFnPair> fns_first;
  std::vector<ScalarFnPair> fns_second;
};

std::vector<ScalarFnPair> fit_pairs(const TheoremInfo &info, std::vector<ScalarFnPair> fns)
{
  std::vector<ScalarFnPair> out;
  for (std::size_t k = 0; k < info.fn_pairs; ++k)
  {
    ScalarFnPair fg = fns.empty() ? ScalarFnPair::power(0.5) : fns[std::min(k, fns.size() - 1)];
    if (info.power_pair_only && fg.kind != ScalarFnPair::Kind::Power)
    {
      fg = ScalarFnPair::power(0.5);
    }
    out.push_back(fg);
  }
  return out;
}

bool is_pair(const std::string &a, const std::string &b, const char *x, const char *y)
{
  return (a == x && b == y) || (a == y && b == x);
}

// Parameter recipes from the incomparability notes, cycled with plain generated trials.
Trial make_trial(const std::string &first, const std::string &second, std::size_t trial, const GenConfig &g)
{
  const TheoremInfo &ia = theorem_info(first);
  const TheoremInfo &ib = theorem_info(second);
  const Instance inst = gen_instance(first, g);
  Trial t;
  t.metric = inst.metric;
  t.ops = inst.operands;
  t.params_first = inst.params;
  t.params_second = inst.params;
  try
  {
    validate_params(second, t.params_second);
  }
  catch (const Error &)
  {
    t.params_second = gen_instance(second, g).params;
  }
  t.fns_first = fit_pairs(ia, inst.fns);
  t.fns_second = fit_pairs(ib, inst.fns);
  const std::size_t phase = trial % 3;

  if (is_pair(first, second, "FULL_W_1", "FULL_W_2"))
  {
    if (trial == 0)
    {
      t.recipe = "worked instance X=1/2, Y=1, Z=W=0";
      t.metric = Metric::identity(1);
      t.ops = {{"X", Matrix{{0.5}}}, {"Y", Matrix{{1.0}}}, {"Z", Matrix{{0.0}}}, {"W", Matrix{{0.0}}}};
    }
    else if (phase == 1)
    {
      t.recipe = "X=W=0, Z=Y";
      const Matrix o(g.dim, g.dim);
      t.ops["X"] = o;
      t.ops["W"] = o;
      t.ops["Z"] = t.ops["Y"];
    }
  }
  else if (is_pair(first, second, "OFFDIAG_FG", "OFFDIAG_2FG"))
  {
    BoundParams p;
    p.p = 2.0;
    p.q = 2.0;
    const auto root = ScalarFnPair::power(0.5);
    if (phase == 0)
    {
      t.recipe = "r=1, p=q=2, same f,g";
      p.r = 1.0;
      const ScalarFnPair fg = inst.fns.empty() ? root : inst.fns[0];
      t.fns_first = fit_pairs(ia, {fg});
      t.fns_second = fit_pairs(ib, {fg});
    }
    else if (phase == 1)
    {
      t.recipe = "f=g=sqrt, r>=2, X=Y";
      p.r = 2.0 + 0.25 * static_cast<double>(trial % 8);
      t.ops["Y"] = t.ops["X"];
      t.fns_first = fit_pairs(ia, {root});
      t.fns_second = fit_pairs(ib, {root});
    }
    if (phase != 2)
    {
      t.params_first = p;
      t.params_second = p;
    }
  }
  else if (is_pair(first, second, "NXN_S", "NXN_R"))
  {
    if (phase == 0)
    {
      t.recipe = "f=g=sqrt";
      t.fns_first = {ScalarFnPair::power(0.5)};
      t.fns_second = t.fns_first;
    }
    else if (phase == 1)
    {
      t.recipe = "f=t, g=1";
      const auto lin = ScalarFnPair::custom(
          "t,1", [](double s) { return s; }, [](double) { return 1.0; });
      t.fns_first = {lin};
      t.fns_second = {lin};
    }
  }
  return t;
}

}  // namespace

ExploreResult explore(const std::string &first, const std::string &second, std::size_t trials, std::uint64_t seed,
                      std::size_t max_dim, AbsConvention abs)
{
  if (!comparable(first, second))
  {
    throw Error(ErrorKind::BadParams, first + " and " + second + " do not bound the same quantity");
  }
  CampaignConfig cfg;
  cfg.theorems = {first, second};
  cfg.seed = seed;
  cfg.max_dim = max_dim;
  cfg.trials = std::max<std::size_t>(trials, 1);
  cfg.validate();

  ExploreResult res;
  res.first = theorem_info(first).id;
  res.second = theorem_info(second).id;
  EvalOptions opts;
  opts.abs = abs;
  for (std::size_t trial = 0; trial < trials && !res.both(); ++trial)
  {
    const GenConfig g = trial_config(cfg, trial);
    const Trial t = make_trial(res.first, res.second, trial, g);
    opts.seed = mix(g.seed, 0x65787066ULL);
    const CheckRecord a = evaluate(res.first, t.metric, t.ops, t.params_first, t.fns_first, opts);
    const CheckRecord b = evaluate(res.second, t.metric, t.ops, t.params_second, t.fns_second, opts);
    res.trials_run = trial + 1;
    if (!a.hypotheses_ok || !b.hypotheses_ok)
    {
      continue;
    }
    const Witness w{trial, t.recipe, a.rhs, b.rhs, t.metric.dim(), t.metric.rank(), g.seed};
    if (!res.first_smaller && strictly_below(a.rhs, b.rhs))
    {
      res.first_smaller = w;
    }
    if (!res.second_smaller && strictly_below(b.rhs, a.rhs))
    {
      res.second_smaller = w;
    }
  }
  return res;
}

}  // namespace semihilbert
