#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "semihilbert/block.hpp"
#include "semihilbert/catalog.hpp"
#include "semihilbert/error.hpp"

using namespace semihilbert;
using fixture::kind_of;
using fixture::random_commuting;
using fixture::random_intertwining;
using fixture::random_member;
using fixture::random_metric;

namespace
{

const Matrix kN{{0, 1}, {0, 0}};

std::vector<ScalarFnPair> pairs_for(const TheoremInfo &info)
{
  std::vector<ScalarFnPair> fns;
  for (std::size_t k = 0; k < info.fn_pairs; ++k)
  {
    fns.push_back(ScalarFnPair::power(0.5));
  }
  return fns;
}

Operands zeros_for(const TheoremInfo &info, std::size_t n)
{
  Operands ops;
  const auto names = info.operands.empty() && info.id.starts_with("NXN_") ? nxn_names(2) : info.operands;
  for (const auto &name : names)
  {
    ops[name] = Matrix(n, n);
  }
  return ops;
}

BoundParams params_for(std::string_view id)
{
  BoundParams p;
  if (id == "TRIPLE" || id == "POWER_2R_FG" || id == "OFFDIAG_FG")
  {
    p.r = 1.0;
    p.p = 2.0;
    p.q = 2.0;
  }
  return p;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("scalar young chains")
{
  BoundParams p;
  p.alpha = 0.5;
  p.r = 1.0;
  CheckRecord r = scalar_young(1, 1, p, YoungForm::Weighted);
  CHECK(r.lhs == doctest::Approx(1.0));
  CHECK(r.extras.at("middle") == doctest::Approx(1.0));
  CHECK(r.rhs == doctest::Approx(1.0));
  CHECK(r.verdict == Verdict::Holds);

  p.alpha = 1.0;
  p.r = 2.0;
  r = scalar_young(4, 0, p, YoungForm::Weighted);
  CHECK(r.lhs == doctest::Approx(4.0));
  CHECK(r.extras.at("middle") == doctest::Approx(4.0));
  CHECK(r.rhs == doctest::Approx(4.0));
  CHECK(r.verdict == Verdict::Holds);

  p.alpha = 0.5;
  r = scalar_young(2, 8, p, YoungForm::Weighted);
  CHECK(r.lhs == doctest::Approx(4.0));
  CHECK(r.extras.at("middle") == doctest::Approx(5.0));
  CHECK(r.rhs == doctest::Approx(std::sqrt(34.0)));

  p.p = 3.0;
  p.q = 1.5;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ud(0.0, 5.0);
  for (int k = 0; k < 200; ++k)
  {
    p.r = 1.0 + ud(rng);
    CHECK(scalar_young(ud(rng), ud(rng), p, YoungForm::Conjugate).verdict == Verdict::Holds);
  }

  CHECK(kind_of([&] { scalar_young(-1, 1, p, YoungForm::Weighted); }) == ErrorKind::BadParams);
  p.r = 0.5;
  CHECK(kind_of([&] { scalar_young(1, 1, p, YoungForm::Weighted); }) == ErrorKind::BadParams);
}

TEST_CASE("registry")
{
  CHECK(inequality_registry().size() == 22);
  CHECK(equality_registry().size() == 8);
  CHECK(theorem_info("FULL_W_2").operands.size() == 4);
  CHECK(theorem_info("LEMMA31_VII").equality);
  CHECK(kind_of([] { theorem_info("NOPE"); }) == ErrorKind::UnknownTheorem);
  CHECK(nxn_names(2) == std::vector<std::string>{"T11", "T12", "T21", "T22"});
}

TEST_CASE("hypothesis residual examples")
{
  const Metric id = Metric::identity(2);
  std::mt19937_64 rng(6);
  const Matrix x = oracle::gaussian_matrix(rng, 2, 2);
  CHECK(hypothesis_residuals("MIXED_SCHWARZ_T", id, {{"T", x}}).at("commute:T") <= 1e-15);

  const Metric d(Matrix{{1, 0}, {0, 2}});
  const auto res = hypothesis_residuals("MIXED_SCHWARZ_T", d, {{"T", kN}});
  CHECK(res.at("commute:T") == doctest::Approx(1.0));
  CHECK_FALSE(residual_ok("commute:T", res.at("commute:T"), d));

  const Metric d10(Matrix{{1, 0}, {0, 0}});
  const auto m = hypothesis_residuals("POWER_2R", d10, {{"T", kN}});
  CHECK_FALSE(residual_ok("member:T", m.at("member:T"), d10));

  CHECK(kind_of([&] { hypothesis_residuals("NOPE", id, {}); }) == ErrorKind::UnknownTheorem);
}

TEST_CASE("worked block instances")
{
  const Metric id = Metric::identity(2);
  const Matrix o(2, 2);
  CheckRecord r = evaluate("FULL_W_1", id, {{"X", o}, {"Y", kN}, {"Z", kN}, {"W", o}}, {}, {});
  CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(r.verdict == Verdict::Holds);

  r = evaluate("FULL_W_2", id, {{"X", o}, {"Y", kN}, {"Z", o}, {"W", o}}, {}, {});
  CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(r.verdict == Verdict::Holds);

  const Metric one = Metric::identity(1);
  const Operands ops{{"X", Matrix{{0.5}}}, {"Y", Matrix{{1.0}}}, {"Z", Matrix{{0.0}}}, {"W", Matrix{{0.0}}}};
  const CheckRecord a = evaluate("FULL_W_1", one, ops, {}, {});
  const CheckRecord b = evaluate("FULL_W_2", one, ops, {}, {});
  CHECK(a.rhs == doctest::Approx(10.0 / 8.0).epsilon(1e-12));
  CHECK(b.rhs == doctest::Approx(9.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("zero operands hold for every entry")
{
  std::mt19937_64 rng(7);
  for (const std::size_t rank : {2u, 1u})
  {
    const Metric m(random_metric(rng, 2, rank));
    for (const auto *reg : {&inequality_registry(), &equality_registry()})
    {
      for (const auto &info : *reg)
      {
        const CheckRecord r = evaluate(info.id, m, zeros_for(info, 2), params_for(info.id), pairs_for(info));
        CHECK_MESSAGE(r.verdict == Verdict::Holds, info.id);
        if (info.id != "BUZANO")
        {
          CHECK_MESSAGE(std::abs(r.lhs) <= 1e-14, info.id);
        }
        CHECK(r.rhs >= -1e-14);
      }
    }
  }
}

TEST_CASE("evaluation errors")
{
  const Metric id = Metric::identity(2);
  CHECK(kind_of([&] { evaluate("NOPE", id, {}, {}, {}); }) == ErrorKind::UnknownTheorem);
  CHECK(kind_of([&] { evaluate("POWER_2R", id, {{"T", Matrix(3, 3)}}, {}, {}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { evaluate("POWER_2R", id, {{"X", kN}}, {}, {}); }) == ErrorKind::DimensionMismatch);

  BoundParams p;
  p.r = 0.5;
  p.p = 3.0;
  p.q = 1.5;
  const Operands triple{{"X", Matrix::identity(2)}, {"T", kN}, {"Y", Matrix::identity(2)}};
  CHECK(kind_of([&] { evaluate("TRIPLE", id, triple, p, {}); }) == ErrorKind::BadParams);
  p.r = 2.0;
  CHECK_FALSE(kind_of([&] { evaluate("TRIPLE", id, triple, p, {}); }));
  p.q = 2.0;
  CHECK(kind_of([&] { evaluate("TRIPLE", id, triple, p, {}); }) == ErrorKind::BadParams);
  p = {};
  p.r = 0.5;
  CHECK(kind_of([&] { evaluate("POWER_2R", id, {{"T", kN}}, p, {}); }) == ErrorKind::BadParams);

  CHECK(kind_of([&] { evaluate("MIXED_SCHWARZ_T", id, {{"T", kN}}, {}, {}); }) == ErrorKind::BadParams);
  const auto bad = ScalarFnPair::custom("bad", [](double t) { return t; }, [](double t) { return t; });
  CHECK(kind_of([&] { evaluate("MIXED_SCHWARZ_T", id, {{"T", kN}}, {}, {bad}); }) == ErrorKind::BadParams);
  CHECK(kind_of([&] { evaluate("PROD_XY_COR", id, {{"X", kN}, {"Y", kN}}, {}, {ScalarFnPair::rational()}); }) ==
        ErrorKind::BadParams);
  CHECK(kind_of([] { ScalarFnPair::power(1.5); }) == ErrorKind::BadParams);
}

TEST_CASE("failed hypotheses give skipped")
{
  const Metric d(Matrix{{1, 0}, {0, 2}});
  const CheckRecord r = evaluate("MIXED_SCHWARZ_T", d, {{"T", kN}}, {}, {ScalarFnPair::power(0.5)});
  CHECK_FALSE(r.hypotheses_ok);
  CHECK(r.verdict == Verdict::Skipped);
  const Metric d10(Matrix{{1, 0}, {0, 0}});
  CHECK(evaluate("LEMMA31_I", d10, {{"X", kN}, {"Y", kN}}, {}, {}).verdict == Verdict::Skipped);
}

TEST_CASE("function pairs")
{
  for (const auto &fg : {ScalarFnPair::power(0.0), ScalarFnPair::power(0.3), ScalarFnPair::power(1.0),
                         ScalarFnPair::rational(), ScalarFnPair::log1p()})
  {
    CHECK_MESSAGE(pair_defect(fg, 1e3) <= 1e-10 * 1e3, fg.name);
    CHECK(fg.f(0.0) * fg.g(0.0) == 0.0);
  }
  const auto neg = ScalarFnPair::custom("neg", [](double t) { return -t; }, [](double) { return -1.0; });
  CHECK(std::isinf(pair_defect(neg, 10.0)));
}

TEST_CASE("specialized corollaries agree with their parents")
{
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  for (int trial = 0; trial < 24; ++trial)
  {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    const std::size_t rank = trial % 2 == 0 ? n : 1 + static_cast<std::size_t>(trial / 2) % n;
    const Metric m(random_metric(rng, n, rank));
    const double rho = ud(rng);
    const auto pw = ScalarFnPair::power(rho);
    BoundParams p;
    p.r = 1.0 + 2.0 * ud(rng);

    const auto [x, y] = random_intertwining(rng, m);
    BoundParams pa = p;
    pa.alpha2 = 2.0;
    pa.beta2 = 2.0;
    const CheckRecord cor = evaluate("PROD_XY_COR", m, {{"X", x}, {"Y", y}}, p, {pw});
    const CheckRecord par = evaluate("PROD_XY", m, {{"X", x}, {"Y", y}}, pa, {pw});
    CHECK(cor.hypotheses_ok);
    CHECK(rel(cor.lhs, par.lhs) <= 1e-10);
    CHECK(rel(cor.rhs, par.rhs) <= 1e-10);

    const Matrix cx = random_commuting(rng, m);
    const Matrix cy = random_commuting(rng, m);
    const CheckRecord oc = evaluate("OFFDIAG_2FG_COR", m, {{"X", cx}, {"Y", cy}}, p, {pw});
    const CheckRecord op = evaluate("OFFDIAG_2FG", m, {{"X", cx}, {"Y", cy}}, p, {pw, pw});
    CHECK(oc.hypotheses_ok);
    CHECK(rel(oc.rhs, op.rhs) <= 1e-10);

    Operands grid;
    for (const auto &name : nxn_names(2 + static_cast<std::size_t>(trial % 2)))
    {
      grid[name] = random_commuting(rng, m);
    }
    const CheckRecord nc = evaluate("NXN_R_COR", m, grid, {}, {});
    const CheckRecord np = evaluate("NXN_R", m, grid, {}, {ScalarFnPair::power(0.5)});
    CHECK(nc.hypotheses_ok);
    CHECK(rel(nc.rhs, np.rhs) <= 1e-10);
    CHECK(rel(nc.lhs, np.lhs) <= 1e-10);

    const Matrix a = random_member(rng, m);
    const Matrix b = random_member(rng, m);
    const CheckRecord w1c = evaluate("FULL_W_1_COR", m, {{"X", a}, {"Y", b}}, {}, {});
    const CheckRecord w1 = evaluate("FULL_W_1", m, {{"X", a}, {"Y", b}, {"Z", b}, {"W", a}}, {}, {});
    CHECK(rel(w1c.lhs, w1.lhs) <= 1e-10);
    CHECK(rel(w1c.rhs, w1.rhs) <= 1e-10);
    const CheckRecord w2c = evaluate("FULL_W_2_COR", m, {{"X", a}, {"Y", b}}, {}, {});
    const CheckRecord w2 = evaluate("FULL_W_2", m, {{"X", a}, {"Y", b}, {"Z", b}, {"W", a}}, {}, {});
    CHECK(w2c.hypotheses_ok);
    CHECK(rel(w2c.lhs, w2.lhs) <= 1e-10);
    CHECK(rel(w2c.rhs, w2.rhs) <= 1e-10);
  }
}

TEST_CASE("identity metric reproduces classical values")
{
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 8; ++trial)
  {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const Metric id = Metric::identity(n);
    const Matrix eye = Matrix::identity(n);
    const Matrix t = oracle::gaussian_matrix(rng, n, n);
    const Matrix s = oracle::gaussian_matrix(rng, n, n);

    CheckRecord r = evaluate("EQUIV", id, {{"T", t}}, {}, {});
    CHECK(rel(r.lhs, oracle::a_wnum(eye, t, rng, 5000)) <= 1e-3);
    CHECK(rel(r.rhs, oracle::a_norm(eye, t, rng, 5000)) <= 1e-3);
    CHECK(r.verdict == Verdict::Holds);

    r = evaluate("POWER_2R", id, {{"T", t}}, {}, {});
    const double w = oracle::a_wnum(eye, t, rng, 5000);
    const double w2 = oracle::a_wnum(eye, t * t, rng, 5000);
    const double nn = oracle::a_norm(eye, t * t.adjoint() + t.adjoint() * t, rng, 5000);
    CHECK(rel(r.lhs, w * w) <= 1e-3);
    CHECK(rel(r.rhs, 0.5 * w2 + 0.25 * nn) <= 1e-3);
    CHECK(r.verdict == Verdict::Holds);

    const Matrix eye2 = Matrix::identity(2 * n);
    r = evaluate("FULL_NORM", id, {{"X", t}, {"Y", s}, {"Z", s * t}, {"W", t + s}}, {}, {});
    const double nb = oracle::a_norm(eye2, block2(t, s, s * t, t + s).assembled(), rng, 5000);
    CHECK(rel(r.lhs, nb * nb) <= 1e-3);
    CHECK(r.verdict == Verdict::Holds);

    r = evaluate("OFFDIAG_SANDWICH", id, {{"X", t}, {"Y", s}}, {}, {});
    CHECK(rel(r.lhs, oracle::a_wnum(eye2, block_offdiag(t, s).assembled(), rng, 5000)) <= 1e-3);
    CHECK(rel(r.extras.at("lower"), 0.5 * oracle::a_norm(eye, t + s.adjoint(), rng, 5000)) <= 1e-3);
    CHECK(r.verdict == Verdict::Holds);
  }
}

TEST_CASE("product bound on intertwining pairs")
{
  std::mt19937_64 rng(10);
  BoundParams p;
  p.r = 1.0;
  p.alpha2 = 2.0;
  p.beta2 = 2.0;
  for (int trial = 0; trial < 20; ++trial)
  {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    const std::size_t rank = trial % 2 == 0 ? n : 1 + static_cast<std::size_t>(trial / 2) % n;
    const Matrix a = random_metric(rng, n, rank);
    const Metric m(a);
    const auto [x, y] = random_intertwining(rng, m);
    const CheckRecord r = evaluate("PROD_XY", m, {{"X", x}, {"Y", y}}, p, {ScalarFnPair::power(0.5)});
    CHECK(r.hypotheses_ok);
    for (const auto &[name, value] : r.hypothesis_residuals)
    {
      CHECK_MESSAGE(value <= 1e-10, name);
    }
    CHECK(rel(r.lhs, oracle::a_wnum(a, x * y, rng, 5000)) <= 1e-3);
    // the pair intertwines under A = I only when A has no kernel
    if (m.full_rank())
    {
      CHECK(evaluate("PROD_XY", Metric::identity(n), {{"X", x}, {"Y", y}}, p, {ScalarFnPair::power(0.5)}).verdict ==
            Verdict::Holds);
    }
  }
}

TEST_CASE("sampling entries")
{
  std::mt19937_64 rng(11);
  EvalOptions opts;
  opts.tuples = 500;
  for (int trial = 0; trial < 12; ++trial)
  {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    const std::size_t rank = trial % 2 == 0 ? n : 1 + static_cast<std::size_t>(trial / 2) % n;
    const Metric m(random_metric(rng, n, rank));
    opts.seed = static_cast<std::uint64_t>(trial);

    CheckRecord r = evaluate("BUZANO", m, {}, {}, {}, opts);
    CHECK(r.verdict == Verdict::Holds);
    CHECK(r.extras.at("tuples") == 500.0);

    // PSD and commuting with A
    const Matrix c = random_commuting(rng, m);
    const Matrix t = c.adjoint() * c;
    BoundParams p;
    p.r = 1.0 + static_cast<double>(trial % 3);
    r = evaluate("MCCARTHY", m, {{"T", t}}, p, {}, opts);
    CHECK(r.hypotheses_ok);
    CHECK(r.verdict == Verdict::Holds);
    CHECK(r.extras.at("tuples") == 1000.0);

    r = evaluate("MIXED_SCHWARZ_T", m, {{"T", random_commuting(rng, m)}}, {}, {ScalarFnPair::power(0.5)}, opts);
    CHECK(r.hypotheses_ok);
    CHECK(r.lhs >= 0.0);

    const CheckRecord again =
        evaluate("MIXED_SCHWARZ_T", m, {{"T", random_commuting(rng, m)}}, {}, {ScalarFnPair::power(0.5)}, opts);
    CHECK(again.extras.at("tuples") == 500.0);
  }
}

TEST_CASE("sandwich lower bound and equivalence")
{
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial)
  {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    const std::size_t rank = trial % 2 == 0 ? n : 1 + static_cast<std::size_t>(trial / 2) % n;
    const Metric m(random_metric(rng, n, rank));
    const Matrix x = random_commuting(rng, m);
    const Matrix y = random_commuting(rng, m);
    const CheckRecord r = evaluate("OFFDIAG_SANDWICH", m, {{"X", x}, {"Y", y}}, {}, {});
    CHECK(r.extras.at("lower") <= r.lhs + 1e-10 * std::max(1.0, r.lhs));
    const CheckRecord e = evaluate("EQUIV", m, {{"T", random_member(rng, m)}}, {}, {});
    CHECK(e.verdict == Verdict::Holds);
  }
}

TEST_CASE("evaluation is deterministic")
{
  std::mt19937_64 rng(13);
  const Metric m(random_metric(rng, 3, 2));
  EvalOptions opts;
  opts.seed = 99;
  const Operands ops{{"T", random_commuting(rng, m)}};
  const CheckRecord a = evaluate("MIXED_SCHWARZ_T", m, ops, {}, {ScalarFnPair::power(0.25)}, opts);
  const CheckRecord b = evaluate("MIXED_SCHWARZ_T", m, ops, {}, {ScalarFnPair::power(0.25)}, opts);
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
}
