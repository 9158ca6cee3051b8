// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#include "semihilbert/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "semihilbert/error.hpp"

namespace semihilbert
{

namespace
{

constexpr double kGenTol = 1e-10;

struct FamilyName
{
  Family family;
  const char *name;
};

constexpr FamilyName kFamilies[] = {
    {Family::Free, "FREE"},
    {Family::Member, "MEMBER"},
    {Family::Commuting, "COMMUTING"},
    {Family::PsdCommuting, "PSD_COMMUTING"},
    {Family::ASelfadjoint, "A_SELFADJOINT"},
    {Family::IntertwiningPair, "INTERTWINING_PAIR"},
};

cplx gauss(SplitMix64 &rng)
{
  std::normal_distribution<double> nd(0.0, std::numbers::sqrt2 / 2.0);
  const double re = nd(rng);
  return {re, nd(rng)};
}

Matrix gaussian(std::size_t r, std::size_t c, SplitMix64 &rng)
{
  Matrix g(r, c);
  for (std::size_t i = 0; i < r; ++i)
  {
    for (std::size_t j = 0; j < c; ++j)
    {
      g(i, j) = gauss(rng);
    }
  }
  return g;
}

// Index ranges of A's eigenvalue groups, eigenvalues sorted descending and
// merged while consecutive gaps stay within tau.
std::vector<std::pair<std::size_t, std::size_t>> eigen_groups(const Metric &m)
{
  const auto &ev = m.eig().eigenvalues;
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= ev.size(); ++k)
  {
    const bool split = k == ev.size() || std::abs(ev[k - 1] - ev[k]) > m.tau() ||
                       (ev[k - 1] > m.tau()) != (ev[k] > m.tau());
    if (split)
    {
      groups.emplace_back(start, k);
      start = k;
    }
  }
  return groups;
}

// V T' V* for T' given in A's eigenbasis.
Matrix from_eigenbasis(const Metric &m, const Matrix &t)
{
  const Matrix &v = m.eig().basis;
  return v * t * v.adjoint();
}

Matrix block_diagonal_in_basis(const Metric &m, SplitMix64 &rng, bool psd)
{
  const std::size_t n = m.dim();
  Matrix t(n, n);
  for (const auto &[lo, hi] : eigen_groups(m))
  {
    const std::size_t k = hi - lo;
    Matrix g = gaussian(k, k, rng);
    if (psd)
    {
      g = g * g.adjoint();
    }
    for (std::size_t i = 0; i < k; ++i)
    {
      for (std::size_t j = 0; j < k; ++j)
      {
        t(lo + i, lo + j) = g(i, j);
      }
    }
  }
  const Matrix out = from_eigenbasis(m, t);
  return psd ? out.hermitian_part() : out;
}

void check(bool ok, Family f, const char *clause, double residual)
{
  if (!ok)
  {
    throw Error(ErrorKind::BadConfig, to_string(f) + ": generated operand fails " + clause + " (residual " +
                                          std::to_string(residual) + ")");
  }
}

double uniform(SplitMix64 &rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// A conjugate pair (p, p / (p - 1)); p = 2 a third of the time.
std::pair<double, double> conjugate_pair(SplitMix64 &rng)
{
  const double p = rng() % 3 == 0 ? 2.0 : uniform(rng, 1.25, 5.0);
  return {p, p / (p - 1.0)};
}

ScalarFnPair random_pair(SplitMix64 &rng, bool power_only)
{
  const auto pick = power_only ? 0 : rng() % 4;
  switch (pick)
  {
  case 1:
    return ScalarFnPair::power(0.5);
  case 2:
    return ScalarFnPair::rational();
  case 3:
    return ScalarFnPair::log1p();
  default:
    return ScalarFnPair::power(uniform(rng, 0.0, 1.0));
  }
}

BoundParams random_params(std::string_view id, SplitMix64 &rng)
{
  BoundParams p;
  p.r = rng() % 3 == 0 ? 1.0 : uniform(rng, 1.0, 3.0);
  std::tie(p.p, p.q) = conjugate_pair(rng);
  std::tie(p.alpha2, p.beta2) = conjugate_pair(rng);
  p.alpha = uniform(rng, 0.0, 1.0);
  // pr, qr >= 2 with a hair of margin against rounding in the check
  const double floor = 2.0 / std::min(p.p, p.q) * (1.0 + 1e-9);
  if (id == "TRIPLE")
  {
    p.r = floor * uniform(rng, 1.0, 2.0);
  }
  else if (id == "POWER_2R_FG" || id == "OFFDIAG_FG")
  {
    p.r = std::max(p.r, floor);
  }
  return p;
}

}  // namespace

std::string to_string(Family f)
{
  for (const auto &fam : kFamilies)
  {
    if (fam.family == f)
    {
      return fam.name;
    }
  }
  return "?";
}

Family family_from_string(std::string_view s)
{
  for (const auto &fam : kFamilies)
  {
    if (s == fam.name)
    {
      return fam.family;
    }
  }
  throw Error(ErrorKind::BadFamily, "unknown family " + std::string(s));
}

void GenConfig::validate() const
{
  if (dim < 1)
  {
    throw Error(ErrorKind::BadConfig, "dim must be >= 1");
  }
  if (metric_rank < 1 || metric_rank > dim)
  {
    throw Error(ErrorKind::BadConfig, "metric_rank must lie in 1..dim");
  }
  if (!(spread_lo > 0.0) || !(spread_hi >= spread_lo) || !std::isfinite(spread_hi))
  {
    throw Error(ErrorKind::BadConfig, "eigen spread must be a positive interval");
  }
  if (repeated_eigs >= metric_rank && repeated_eigs > 0)
  {
    throw Error(ErrorKind::BadConfig, "repeated_eigs must be below metric_rank");
  }
  if (blocks < 1)
  {
    throw Error(ErrorKind::BadConfig, "blocks must be >= 1");
  }
}

Matrix haar_unitary(std::size_t n, SplitMix64 &rng)
{
  Matrix q = gaussian(n, n, rng);
  for (std::size_t j = 0; j < n; ++j)
  {
    Vector v = q.column(j);
    for (int pass = 0; pass < 2; ++pass)
    {
      for (std::size_t i = 0; i < j; ++i)
      {
        const Vector qi = q.column(i);
        const cplx c = inner(v, qi);
        for (std::size_t k = 0; k < n; ++k)
        {
          v[k] -= c * qi[k];
        }
      }
    }
    const double nv = norm(v);
    for (auto &z : v)
    {
      z /= nv;
    }
    q.set_column(j, v);
  }
  return q;
}

Metric gen_metric(const GenConfig &config)
{
  config.validate();
  SplitMix64 rng = SplitMix64(config.seed).split(0);
  const std::size_t n = config.dim;
  const Matrix q = haar_unitary(n, rng);
  std::vector<double> lam(n, 0.0);
  for (std::size_t k = 0; k < config.metric_rank; ++k)
  {
    lam[k] = uniform(rng, config.spread_lo, config.spread_hi);
  }
  for (std::size_t k = 1; k <= config.repeated_eigs; ++k)
  {
    lam[k] = lam[0];
  }
  const Matrix a = (q * Matrix::diagonal(std::span<const double>(lam)) * q.adjoint()).hermitian_part();
  return Metric(a);
}

std::vector<Matrix> gen_operand(Family family, const Metric &m, std::uint64_t seed)
{
  SplitMix64 rng(seed);
  const std::size_t n = m.dim();
  const std::size_t r = m.rank();
  const double scale = std::max(1.0, m.norm());

  switch (family)
  {
  case Family::Free:
    return {gaussian(n, n, rng)};

  case Family::Member:
  {
    // zero the kernel -> range block in A's eigenbasis
    Matrix t = gaussian(n, n, rng);
    for (std::size_t i = 0; i < r; ++i)
    {
      for (std::size_t j = r; j < n; ++j)
      {
        t(i, j) = 0.0;
      }
    }
    const Matrix out = from_eigenbasis(m, t);
    const double res = member_residual(m, out);
    check(res <= kGenTol, family, "membership", res);
    return {out};
  }

  case Family::Commuting:
  case Family::PsdCommuting:
  {
    const bool psd = family == Family::PsdCommuting;
    const Matrix out = block_diagonal_in_basis(m, rng, psd);
    const double res = commute_residual(m, out);
    check(res <= kGenTol * scale, family, "commutation", res);
    if (psd)
    {
      const double pres = psd_residual(out);
      check(pres <= kGenTol, family, "positivity", pres);
    }
    return {out};
  }

  case Family::ASelfadjoint:
  {
    Matrix h = gaussian(n, n, rng).hermitian_part();
    h = m.proj() * h * m.proj();
    const Matrix out = m.pinv() * h;
    const double res = selfadjoint_residual(m, out);
    check(res <= kGenTol, family, "A-selfadjointness", res);
    return {out};
  }

  case Family::IntertwiningPair:
  {
    // X, Y diagonal in A's eigenbasis; Y real wherever |x_k|^2 lambda_k > 0.
    Matrix x(n, n);
    Matrix y(n, n);
    const auto &ev = m.eig().eigenvalues;
    const std::size_t zero_at = n > 1 ? rng() % n : n;
    for (std::size_t k = 0; k < n; ++k)
    {
      x(k, k) = k == zero_at ? cplx{} : gauss(rng);
      const cplx yk = gauss(rng);
      const bool seen = std::norm(x(k, k)) * ev[k] > m.tau();
      y(k, k) = seen ? cplx(yk.real() * std::numbers::sqrt2, 0.0) : yk;
    }
    std::vector<Matrix> out{from_eigenbasis(m, x), from_eigenbasis(m, y)};
    const double res = intertwine_residual(m, out[0], out[1]);
    check(res <= kGenTol, family, "intertwining", res);
    const double cres = commute_residual(m, out[0]);
    check(cres <= kGenTol * scale, family, "commutation", cres);
    return out;
  }
  }
  throw Error(ErrorKind::BadFamily, "unknown family");
}

std::vector<std::pair<std::string, Family>> operand_families(std::string_view id, std::size_t blocks)
{
  const TheoremInfo &info = theorem_info(id);
  std::vector<std::pair<std::string, Family>> out;
  auto all = [&](Family f) {
    for (const auto &name : info.operands)
    {
      out.emplace_back(name, f);
    }
  };
  if (id == "BUZANO")
  {
    return out;
  }
  if (id == "MCCARTHY")
  {
    all(Family::PsdCommuting);
  }
  else if (id == "MIXED_SCHWARZ_TS" || id == "PROD_XY" || id == "PROD_XY_COR")
  {
    const auto &ops = info.operands;
    out.emplace_back(ops[0] + "," + ops[1], Family::IntertwiningPair);
  }
  else if (id == "TRIPLE")
  {
    out = {{"X", Family::PsdCommuting}, {"T", Family::Member}, {"Y", Family::PsdCommuting}};
  }
  else if (id == "MIXED_SCHWARZ_T" || id == "POWER_2R_FG" || id.starts_with("OFFDIAG_"))
  {
    all(Family::Commuting);
  }
  else if (id.starts_with("NXN_"))
  {
    for (const auto &name : nxn_names(blocks))
    {
      out.emplace_back(name, Family::Commuting);
    }
  }
  else if (id == "LEMMA32")
  {
    all(Family::Free);
  }
  else
  {
    // POWER_2R, EQUIV, FULL_*, LEMMA31_*; A-quantities need B_A, and MEMBER is FREE when A is invertible
    all(Family::Member);
  }
  return out;
}

Instance gen_instance(std::string_view id, const GenConfig &config)
{
  const TheoremInfo &info = theorem_info(id);
  Instance inst{gen_metric(config), {}, {}, {}, 0.0, 0, config};
  std::uint64_t tag = 1;
  for (const auto &[name, family] : operand_families(id, config.blocks))
  {
    const std::uint64_t seed = mix(config.seed, tag++);
    const auto mats = gen_operand(family, inst.metric, seed);
    if (family == Family::IntertwiningPair)
    {
      const auto comma = name.find(',');
      inst.operands[name.substr(0, comma)] = mats[0];
      inst.operands[name.substr(comma + 1)] = mats[1];
    }
    else
    {
      inst.operands[name] = mats[0];
    }
  }
  SplitMix64 rng(mix(config.seed, 0x70617261ULL));
  inst.params = random_params(id, rng);
  for (std::size_t k = 0; k < info.fn_pairs; ++k)
  {
    inst.fns.push_back(random_pair(rng, info.power_pair_only));
  }
  inst.theta = uniform(rng, -std::numbers::pi, std::numbers::pi);
  inst.sample_seed = mix(config.seed, 0x76656373ULL);
  return inst;
}

}  // namespace semihilbert
