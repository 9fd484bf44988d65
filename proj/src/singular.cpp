#include "fanotk/singular.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fanotk {

JacobianOnPlane jacobian_on_plane(const CISample& sample) {
  const Parameters& params = sample.params;
  PrimeField f(sample.p);
  JacobianOnPlane jac;
  jac.s = params.s();
  jac.m = params.m;
  jac.k = params.k;

  for (int i = 1; i <= jac.s; ++i) {
    std::vector<HomogPoly> row;
    const HomogPoly& gi = sample.g[i - 1];
    for (int h = params.k + 1; h <= params.m; ++h) {
      HomogPoly from_table = linear_part(sample.c, i, h, params, f);
      HomogPoly from_derivative =
          restrict_to_standard_plane(partial_derivative(gi, h, f), params.k);
      if (!(from_table == from_derivative))
        throw InternalError(
            "jacobian_on_plane: coefficient table and differentiation "
            "disagree");
      row.push_back(std::move(from_table));
    }
    // The plane-direction block must restrict to zero; a failure here means
    // the sample left the normal form.
    for (int j = 0; j <= params.k; ++j) {
      if (!restrict_to_standard_plane(partial_derivative(gi, j, f), params.k)
               .is_zero())
        throw InternalError(
            "jacobian_on_plane: plane-direction derivative survives "
            "restriction");
    }
    jac.entries.push_back(std::move(row));
  }
  return jac;
}

namespace {

std::size_t eval_rank(const JacobianOnPlane& jac,
                      const std::vector<std::uint64_t>& point,
                      const PrimeField& f) {
  FpMat m(jac.s, jac.m - jac.k);
  for (int i = 0; i < jac.s; ++i) {
    for (int h = 0; h < jac.m - jac.k; ++h)
      m.at(i, h) = jac.entries[i][h].evaluate(point, f);
  }
  return rank_mod_p(std::move(m), f);
}

}  // namespace

std::vector<std::vector<std::uint64_t>> rank_drop_points(
    const JacobianOnPlane& jac, const PrimeField& f, const PointCaps& caps) {
  const int k = jac.k;
  const std::uint64_t p = f.modulus();
  Int total = gaussian_binom(k + 1, 1, Int(p));  // # points of P^k(F_p)
  if (total > caps.max_points)
    throw CapError("rank_drop_points: projected point count exceeds cap",
                   total.str());

  std::vector<std::vector<std::uint64_t>> hits;
  std::vector<std::uint64_t> point(k + 1, 0);
  // Canonical representatives: leading 1 at position `lead`, zeros before.
  for (int lead = 0; lead <= k; ++lead) {
    std::fill(point.begin(), point.end(), 0);
    point[lead] = 1;
    const int tail = k - lead;
    for (;;) {
      if (eval_rank(jac, point, f) < static_cast<std::size_t>(jac.s))
        hits.push_back(point);
      int pos = tail;
      while (pos > 0 && point[lead + pos] == p - 1) point[lead + pos--] = 0;
      if (pos == 0) break;
      ++point[lead + pos];
    }
  }
  return hits;
}

SingDimReport sing_dim_estimate(const Parameters& params,
                                const std::vector<std::uint64_t>& primes,
                                std::uint64_t family_base, int family_size,
                                const PointCaps& caps) {
  params.validate();
  if (primes.size() < 2)
    throw ParamError("sing_dim_estimate: need at least two primes");
  if (family_size < 1)
    throw ParamError("sing_dim_estimate: family size must be positive");

  SingDimReport rep;
  rep.primes = primes;
  rep.family_base = family_base;
  rep.family_size = family_size;
  rep.expected = classify(params).expected_sing_dim;

  for (std::uint64_t p : primes) {
    PrimeField f(p);
    std::vector<std::size_t> per_seed;
    std::size_t total = 0;
    for (int j = 0; j < family_size; ++j) {
      CISample sample = sample_ci(params, p, family_base + j);
      auto pts = rank_drop_points(jacobian_on_plane(sample), f, caps);
      per_seed.push_back(pts.size());
      total += pts.size();
    }
    rep.counts.push_back(std::move(per_seed));
    rep.totals.push_back(total);
  }

  const std::size_t draws = primes.size() * family_size;
  std::size_t nonzero_draws = 0;
  std::size_t max_count = 0;
  for (const auto& row : rep.counts) {
    for (std::size_t c : row) {
      if (c > 0) ++nonzero_draws;
      max_count = std::max(max_count, c);
    }
  }

  if (params.s() == 1) {
    long long b = 1;
    for (int i = 0; i < params.m - params.k; ++i) b *= params.d[0] - 1;
    rep.bezout_bound = b;
    if (max_count <= static_cast<std::size_t>(b)) {
      // Within the Bezout bound the locus has dimension <= 0. Rational
      // points of a 0-dimensional locus show up in a solid fraction of
      // draws; an empty locus only via coefficient coincidences of order
      // 1/p. A quarter separates the two by a wide margin.
      rep.bezout_route = true;
      rep.status = SingDimReport::Status::estimated;
      rep.estimate = (4 * nonzero_draws >= draws) ? 0 : -1;
      rep.match = rep.estimate == rep.expected;
      return rep;
    }
  }

  bool all_zero = nonzero_draws == 0;
  if (all_zero) {
    rep.status = SingDimReport::Status::estimated;
    rep.estimate = -1;
    rep.match = rep.estimate == rep.expected;
    return rep;
  }

  bool bounded = true;
  bool shrink_violation = false;
  for (std::size_t j = 0; j + 1 < rep.totals.size(); ++j) {
    std::size_t prev = rep.totals[j], next = rep.totals[j + 1];
    // next <= max(1.5 * prev, prev + 3), in integers
    if (!(2 * next <= 3 * prev || next <= prev + 3)) bounded = false;
    // mirrored tolerance for shrinking counts
    if (next + 3 < prev && 3 * next < 2 * prev) shrink_violation = true;
  }
  if (bounded) {
    rep.status = SingDimReport::Status::estimated;
    rep.estimate = 0;
    rep.match = rep.estimate == rep.expected;
    return rep;
  }
  if (shrink_violation || rep.totals.front() == 0) {
    rep.status = SingDimReport::Status::inconclusive;
    return rep;
  }

  double ratio = static_cast<double>(rep.totals.back()) /
                 static_cast<double>(rep.totals.front());
  double pratio = static_cast<double>(primes.back()) /
                  static_cast<double>(primes.front());
  long long e = std::llround(std::log(ratio) / std::log(pratio));
  if (e < 1) {
    rep.status = SingDimReport::Status::inconclusive;
    return rep;
  }
  rep.status = SingDimReport::Status::estimated;
  rep.estimate = static_cast<int>(e);
  rep.match = rep.estimate == rep.expected;
  return rep;
}

}  // namespace fanotk
