// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semihilbert/campaign.hpp"

using namespace semihilbert;

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double rel(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

int failures = 0;

void report(int id, const char *title, bool ok, const std::string &detail)
{
  std::printf("criterion %d %s: %s (%s)\n", id, ok ? "PASS" : "FAIL", title, detail.c_str());
  std::fflush(stdout);
  failures += ok ? 0 : 1;
}

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0)
{
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

GenConfig member_config(std::size_t trial, std::size_t max_dim, std::uint64_t seed)
{
  GenConfig g;
  g.dim = 1 + trial % max_dim;
  g.metric_rank = (trial / max_dim) % 2 == 0 ? g.dim : 1 + (trial / (2 * max_dim)) % g.dim;
  g.seed = mix(seed, trial);
  return g;
}

void criterion1()
{
  const auto t0 = Clock::now();
  const auto checks = worked_instances(1e-9);
  const double dt = seconds_since(t0);
  bool ok = dt < 1.0;
  double worst = 0.0;
  for (const auto &c : checks)
  {
    ok = ok && c.ok;
    worst = std::max(worst, std::abs(c.actual - c.expected));
  }
  report(1, "worked block instances 3/4, 3/4, 10/8, 9/8", ok,
         std::to_string(checks.size()) + fmt(" values, max |diff| %.3g, %.4f s", worst, dt));
}

void criterion2()
{
  CampaignConfig cfg;
  cfg.theorems = expand_theorems("all");
  cfg.trials = 1000;
  cfg.max_dim = 4;
  cfg.seed = 42;
  const CampaignReport r = run_campaign(cfg);
  bool mixed = true;
  std::string bad;
  for (const auto &t : r.theorems)
  {
    mixed = mixed && t.full_rank_trials > 0 && t.deficient_trials > 0 && t.max_dim_seen == 4;
    if (t.violated > 0)
    {
      bad += (bad.empty() ? "" : ",") + t.theorem_id + ":" + std::to_string(t.violated);
    }
  }
  const bool ok = r.total_violated() == 0 && r.wall_time < 300.0 && mixed;
  std::string detail = std::to_string(r.theorems.size()) + " entries x 1000 trials, violated " +
                       std::to_string(r.total_violated()) + fmt(", %.1f s", r.wall_time);
  if (!bad.empty())
  {
    detail += "; " + bad;
  }
  report(2, "full soundness campaign", ok, detail);
}

void criterion3()
{
  CampaignConfig cfg;
  cfg.theorems = expand_theorems("lemmas");
  cfg.trials = 1000;
  cfg.max_dim = 4;
  cfg.seed = 42;
  const CampaignReport r = run_campaign(cfg);
  bool ok = true;
  double worst = 0.0;
  for (const auto &t : r.theorems)
  {
    ok = ok && t.holds == 1000;
    worst = std::min(worst, t.min_slack);
  }
  report(3, "block identity suite", ok,
         std::to_string(r.theorems.size()) + " identities x 1000, worst residual " + fmt("%.3g", -worst));
}

void criterion4()
{
  std::mt19937_64 rng(4);
  bool ok = true;
  double worst_gap = 0.0;
  double worst_excess = -1.0;
  for (std::size_t trial = 0; trial < 200; ++trial)
  {
    const GenConfig g = member_config(trial, 5, 4004);
    const Metric m = gen_metric(g);
    const Matrix t = gen_operand(Family::Member, m, g.seed)[0];
    const double w = a_num_radius(m, t);
    const double nt = a_seminorm(m, t);
    const double ow = oracle::a_wnum(m.matrix(), t, rng, 20000, 40);
    const double on = oracle::a_norm(m.matrix(), t, rng, 20000, 40);
    worst_gap = std::max({worst_gap, std::abs(ow - w), std::abs(on - nt)});
    worst_excess = std::max({worst_excess, ow - w, on - nt});
    ok = ok && std::abs(ow - w) <= 1e-3 && std::abs(on - nt) <= 1e-3 && ow <= w + 1e-8 && on <= nt + 1e-8;
  }
  report(4, "sampling oracle equivalence", ok,
         fmt("200 members dims 1-5, max |oracle - computed| %.3g, max oracle excess %.3g", worst_gap, worst_excess));
}

void criterion5()
{
  bool ok = true;
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  for (std::size_t trial = 0; trial < 500; ++trial)
  {
    const GenConfig g = member_config(trial, 5, 5005);
    const Metric m = gen_metric(g);
    const Matrix t = gen_operand(Family::Member, m, g.seed)[0];
    const double scale = std::max(1.0, op_norm(t)) * std::max(1.0, m.norm());
    const double nt = a_seminorm(m, t);
    const Matrix ts = sharp(m, t);
    const double r1 = std::abs(a_seminorm(m, ts * t) - nt * nt) / std::max(1.0, nt * nt);
    const double r2 = max_abs_diff(sharp(m, ts), m.proj() * t * m.proj()) / scale;
    const Matrix ab = a_abs(m, t);
    const double r3 = max_abs_diff(ab * ab, t.adjoint() * m.matrix() * t) / (scale * std::max(1.0, op_norm(t)));
    e1 = std::max(e1, r1);
    e2 = std::max(e2, r2);
    e3 = std::max(e3, r3);
    ok = ok && r1 <= 1e-7 && r2 <= 1e-9 && r3 <= 1e-9;
  }
  report(5, "algebraic identities", ok,
         fmt("500 members, ||T#T||_A rel %.3g, sharp twice %.3g, |T|_A^2 %.3g (scaled)", e1, e2, e3));
}

void criterion6()
{
  std::mt19937_64 rng(6);
  bool ok = true;
  double worst = 0.0;
  for (std::size_t trial = 0; trial < 200; ++trial)
  {
    const std::size_t n = 1 + trial % 5;
    const Metric id = Metric::identity(n);
    const Matrix t = oracle::gaussian_matrix(rng, n, n);
    const double s = std::max(1.0, oracle::classical_norm(t));
    const double errs[] = {
        rel(a_seminorm(id, t), oracle::classical_norm(t)),
        rel(a_num_radius(id, t), oracle::classical_wnum(t)),
        rel(a_spec_radius(id, t), oracle::classical_spec_radius(t)),
        max_abs_diff(sharp(id, t), t.adjoint()) / s,
        max_abs_diff(a_abs(id, t), oracle::sqrt_pd(t.adjoint() * t)) / s,
    };
    for (const double e : errs)
    {
      worst = std::max(worst, e);
      ok = ok && e <= 1e-10;
    }
  }
  const double wn = a_num_radius(Metric::identity(2), Matrix{{0, 1}, {0, 0}});
  ok = ok && std::abs(wn - 0.5) <= 1e-12;
  report(6, "classical reduction at A = I", ok,
         fmt("200 matrices, 5 quantities, max error %.3g; w(N) - 0.5 = %.3g", worst, wn - 0.5));
}

void criterion7()
{
  bool ok = true;
  std::string detail;
  for (const auto &[a, b] : std::vector<std::pair<std::string, std::string>>{
           {"FULL_W_1", "FULL_W_2"}, {"OFFDIAG_FG", "OFFDIAG_2FG"}, {"NXN_S", "NXN_R"}})
  {
    const ExploreResult r = explore(a, b, 10000, 42);
    ok = ok && r.both();
    detail += (detail.empty() ? "" : "; ") + a + "/" + b + (r.both() ? " both" : " one-sided") + " in " +
              std::to_string(r.trials_run) + " trials";
  }
  report(7, "incomparability witnesses", ok, detail);
}

void criterion8()
{
  bool ok = true;
  double worst = 0.0;
  auto check = [&](const CheckRecord &c, const CheckRecord &p) {
    const double e = std::max(rel(c.lhs, p.lhs), rel(c.rhs, p.rhs));
    worst = std::max(worst, e);
    ok = ok && c.hypotheses_ok && p.hypotheses_ok && e <= 1e-10;
  };
  for (std::size_t trial = 0; trial < 100; ++trial)
  {
    GenConfig g = member_config(trial, 4, 8008);
    g.blocks = 2 + trial % 2;
    {
      const Instance i = gen_instance("PROD_XY_COR", g);
      BoundParams pp = i.params;
      pp.alpha2 = 2.0;
      pp.beta2 = 2.0;
      check(evaluate("PROD_XY_COR", i.metric, i.operands, i.params, i.fns),
            evaluate("PROD_XY", i.metric, i.operands, pp, i.fns));
    }
    {
      const Instance i = gen_instance("OFFDIAG_2FG_COR", g);
      check(evaluate("OFFDIAG_2FG_COR", i.metric, i.operands, i.params, i.fns),
            evaluate("OFFDIAG_2FG", i.metric, i.operands, i.params, {i.fns[0], i.fns[0]}));
    }
    {
      const Instance i = gen_instance("NXN_R_COR", g);
      check(evaluate("NXN_R_COR", i.metric, i.operands, i.params, i.fns),
            evaluate("NXN_R", i.metric, i.operands, i.params, {ScalarFnPair::power(0.5)}));
    }
    for (const char *id : {"FULL_W_1", "FULL_W_2"})
    {
      const std::string cor = std::string(id) + "_COR";
      const Instance i = gen_instance(cor, g);
      const Matrix &x = i.operands.at("X");
      const Matrix &y = i.operands.at("Y");
      check(evaluate(cor, i.metric, i.operands, i.params, i.fns),
            evaluate(id, i.metric, {{"X", x}, {"Y", y}, {"Z", y}, {"W", x}}, i.params, i.fns));
    }
  }
  report(8, "corollaries match their parents", ok, fmt("5 corollaries x 100 instances, max rel diff %.3g", worst));
}

}  // namespace

// Runs every criterion, or only those numbered on the command line.
int main(int argc, char **argv)
{
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8};
  std::vector<int> chosen;
  for (int k = 1; k < argc; ++k)
  {
    chosen.push_back(std::atoi(argv[k]));
  }
  for (int id = 1; id <= 8; ++id)
  {
    if (!chosen.empty() && std::find(chosen.begin(), chosen.end(), id) == chosen.end())
    {
      continue;
    }
    try
    {
      criteria[static_cast<std::size_t>(id - 1)]();
    }
    catch (const std::exception &e)
    {
      report(id, "raised", false, e.what());
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
