// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

// semihilbert: compute, verify, paper-checks, explore, list.
//
// Exit codes: 0 success, 1 violation / mismatch / missing witness,
// 2 operator outside B_A, 3 bad flags or unreadable input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "semihilbert/campaign.hpp"
#include "semihilbert/error.hpp"
#include "semihilbert/matrix_io.hpp"

namespace fs = std::filesystem;
using namespace semihilbert;

namespace
{

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kNotMember = 2;
constexpr int kBadInput = 3;

void print15(double v) { std::printf("%.15g\n", v); }

int run_compute(const std::string &quantity, const std::string &metric_file, const std::string &matrix_file,
                AbsConvention abs)
{
  const Metric m(read_matrix(metric_file));
  const Matrix t = read_matrix(matrix_file);
  if (t.rows() != m.dim() || t.cols() != m.dim())
  {
    throw Error(ErrorKind::DimensionMismatch, "matrix and metric sizes differ");
  }
  if (quantity == "membership")
  {
    const ABoundedCert cert = in_b_a(m, t);
    std::printf("%s residual=%.15g threshold=%.15g\n", cert.member ? "member" : "not-a-member", cert.residual,
                cert.threshold);
    return cert.member ? kOk : kNotMember;
  }
  if (quantity == "a-norm")
  {
    print15(a_seminorm(m, t));
  }
  else if (quantity == "a-wnum")
  {
    print15(a_num_radius(m, t));
  }
  else if (quantity == "a-srad")
  {
    print15(a_spec_radius(m, t));
  }
  else if (quantity == "a-abs")
  {
    std::cout << format_matrix(a_abs(m, t, abs)) << '\n';
  }
  else if (quantity == "sharp")
  {
    std::cout << format_matrix(sharp(m, t)) << '\n';
  }
  else
  {
    std::cout << format_matrix(compress(m, t)) << '\n';
  }
  return kOk;
}

int run_verify(const CampaignConfig &cfg, const std::optional<std::string> &out_dir)
{
  cfg.validate();
  std::ofstream records;
  if (out_dir)
  {
    fs::create_directories(*out_dir);
    records.open(fs::path(*out_dir) / "records.jsonl");
    if (!records)
    {
      throw Error(ErrorKind::BadConfig, "cannot write to " + *out_dir);
    }
  }
  const auto sink = [&](const nlohmann::json &rec) {
    if (records.is_open())
    {
      records << rec.dump() << '\n';
    }
  };
  const CampaignReport report = run_campaign(cfg, sink);
  if (out_dir)
  {
    std::ofstream(fs::path(*out_dir) / "summary.json") << report.to_json(cfg).dump(2) << '\n';
    std::ofstream(fs::path(*out_dir) / "summary.csv") << report.to_csv();
  }
  std::printf("%-18s %7s %7s %7s %8s %14s\n", "theorem", "trials", "holds", "skipped", "violated", "min_slack");
  for (const auto &t : report.theorems)
  {
    std::printf("%-18s %7zu %7zu %7zu %8zu %14.6e\n", t.theorem_id.c_str(), t.trials, t.holds, t.skipped, t.violated,
                t.min_slack);
  }
  std::printf("violated=%zu wall_time=%.2fs seed=%llu\n", report.total_violated(), report.wall_time,
              static_cast<unsigned long long>(report.master_seed));
  return report.total_violated() == 0 ? kOk : kFail;
}

int run_worked_instances()
{
  bool ok = true;
  for (const auto &c : worked_instances())
  {
    std::printf("%-4s %-26s %-9s %s expected=%.15g actual=%.15g", c.ok ? "ok" : "FAIL", c.name.c_str(),
                c.theorem_id.c_str(), c.quantity.c_str(), c.expected, c.actual);
    if (!c.ok)
    {
      std::printf(" diff=%.3e", c.actual - c.expected);
    }
    std::printf("\n");
    ok = ok && c.ok;
  }
  return ok ? kOk : kFail;
}

bool claimed_pair(const std::string &a, const std::string &b)
{
  const auto is = [&](const char *x, const char *y) { return (a == x && b == y) || (a == y && b == x); };
  return is("FULL_W_1", "FULL_W_2") || is("OFFDIAG_FG", "OFFDIAG_2FG") || is("NXN_S", "NXN_R");
}

int run_explore(const std::string &pair, std::size_t trials, std::uint64_t seed, AbsConvention abs)
{
  const auto comma = pair.find(',');
  if (comma == std::string::npos)
  {
    throw Error(ErrorKind::BadConfig, "--pair expects id1,id2");
  }
  const std::string first = pair.substr(0, comma);
  const std::string second = pair.substr(comma + 1);
  const ExploreResult res = explore(first, second, trials, seed, 4, abs);
  std::cout << res.to_json().dump(2) << '\n';
  // only the pairs claimed incomparable must show both directions
  return res.both() || !claimed_pair(res.first, res.second) ? kOk : kFail;
}

AbsConvention parse_abs(const std::string &s)
{
  return s == "range" ? AbsConvention::RangeNormalized : AbsConvention::Literal;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Operators on semi-Hilbertian spaces: quantities and bound verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string abs_name = "literal";
  const auto add_abs = [&](CLI::App *sub) {
    sub->add_option("--abs-convention", abs_name, "How |T|_A is formed: literal or range")
        ->check(CLI::IsMember({"literal", "range"}));
  };

  auto *compute = app.add_subcommand("compute", "Evaluate one quantity");
  std::string quantity;
  std::string metric_file;
  std::string matrix_file;
  compute->add_option("quantity", quantity, "a-norm, a-wnum, a-srad, a-abs, sharp, compress or membership")
      ->required()
      ->check(CLI::IsMember({"a-norm", "a-wnum", "a-srad", "a-abs", "sharp", "compress", "membership"}));
  compute->add_option("--metric", metric_file, "Metric A as a matrix file")->required();
  compute->add_option("--matrix", matrix_file, "Operator T as a matrix file")->required();
  add_abs(compute);

  auto *verify = app.add_subcommand("verify", "Run a seeded verification campaign");
  std::string theorem = "all";
  CampaignConfig cfg;
  std::size_t rank = 0;
  std::optional<std::string> out_dir;
  cfg.tol = default_tolerance();
  verify->add_option("--theorem", theorem, "Registry id, all, or lemmas");
  verify->add_option("--trials", cfg.trials, "Trials per theorem")->check(CLI::PositiveNumber);
  verify->add_option("--dim", cfg.max_dim, "Dimensions cycle through 1..dim")->check(CLI::Range(1, 8));
  verify->add_option("--rank", rank, "Fixed metric rank, capped at each dim")->check(CLI::Range(1, 8));
  verify->add_option("--seed", cfg.seed, "Master seed");
  verify->add_option("--tol", cfg.tol, "Relative tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--tuples", cfg.tuples, "Vector tuples for sampled entries")->check(CLI::PositiveNumber);
  verify->add_option("--spread-lo", cfg.spread_lo, "Smallest positive metric eigenvalue")->check(CLI::PositiveNumber);
  verify->add_option("--spread-hi", cfg.spread_hi, "Largest positive metric eigenvalue")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_dir, "Directory for records.jsonl, summary.json, summary.csv");
  add_abs(verify);

  auto *checks = app.add_subcommand("paper-checks", "Replay the worked block-matrix instances");

  auto *expl = app.add_subcommand("explore", "Search for witnesses that two bounds are incomparable");
  std::string pair;
  std::size_t explore_trials = 10000;
  std::uint64_t explore_seed = 0;
  expl->add_option("--pair", pair, "id1,id2")->required();
  expl->add_option("--trials", explore_trials, "Trial budget")->check(CLI::PositiveNumber);
  expl->add_option("--seed", explore_seed, "Master seed");
  add_abs(expl);

  auto *list = app.add_subcommand("list", "List registry ids");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForAllHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForVersion &e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError &e)
  {
    app.exit(e);
    return kBadInput;
  }

  try
  {
    if (compute->parsed())
    {
      return run_compute(quantity, metric_file, matrix_file, parse_abs(abs_name));
    }
    if (verify->parsed())
    {
      cfg.theorems = expand_theorems(theorem);
      if (rank > 0)
      {
        cfg.rank = rank;
      }
      cfg.abs = parse_abs(abs_name);
      return run_verify(cfg, out_dir);
    }
    if (checks->parsed())
    {
      return run_worked_instances();
    }
    if (expl->parsed())
    {
      return run_explore(pair, explore_trials, explore_seed, parse_abs(abs_name));
    }
    if (list->parsed())
    {
      for (const auto *reg : {&inequality_registry(), &equality_registry()})
      {
        for (const auto &t : *reg)
        {
          std::printf("%-18s %s\n", t.id.c_str(), t.summary.c_str());
        }
      }
      return kOk;
    }
  }
  catch (const Error &e)
  {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.kind() == ErrorKind::NotAMember ? kNotMember : kBadInput;
  }
  catch (const std::exception &e)
  {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kBadInput;
  }
  return kBadInput;
}
