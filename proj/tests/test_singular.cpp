#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanotk/singular.hpp"

using namespace fanotk;

namespace {

Parameters P(int m, int k, std::vector<int> d) {
  return Parameters{m, k, std::move(d)};
}

CISample table_sample(const Parameters& params, std::uint64_t p,
                      const std::vector<std::tuple<int, int, std::vector<int>>>&
                          hot_keys,
                      std::vector<HomogPoly> residuals = {}) {
  PrimeField f(p);
  CISample sample;
  sample.params = params;
  sample.p = p;
  for (const auto& key : coefficient_keys(params)) sample.c.emplace(key, 0);
  for (const auto& [i, h, mu] : hot_keys) sample.c[{i, h, Monomial(mu)}] = 1;
  if (residuals.empty()) {
    for (int di : params.d) sample.r.emplace_back(params.m + 1, di);
  } else {
    sample.r = std::move(residuals);
  }
  sample.g = assemble_g(sample.c, sample.r, params, f);
  return sample;
}

}  // namespace

TEST_CASE("one-hot jacobian block") {
  CISample sample = table_sample(P(3, 1, {4}), 101, {{1, 2, {3, 0}}});
  JacobianOnPlane jac = jacobian_on_plane(sample);
  REQUIRE(jac.entries.size() == 1);
  REQUIRE(jac.entries[0].size() == 2);
  CHECK(jac.entries[0][0] == HomogPoly::from_term(2, Monomial({3, 0}), 1));
  CHECK(jac.entries[0][1].is_zero());
}

TEST_CASE("both extraction routes agree on random samples") {
  for (auto& [m, k, d] : std::vector<std::tuple<int, int, std::vector<int>>>{
           {3, 1, {4}}, {4, 2, {3}}, {4, 2, {2, 2}}, {5, 1, {2, 2, 2}}}) {
    Parameters params = P(m, k, d);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      CISample sample = sample_ci(params, 211, seed);
      JacobianOnPlane jac;  // throws InternalError on route disagreement
      CHECK_NOTHROW(jac = jacobian_on_plane(sample));
      CHECK(jac.entries.size() == static_cast<std::size_t>(params.s()));
      for (int i = 0; i < params.s(); ++i) {
        for (const auto& entry : jac.entries[i]) {
          if (!entry.is_zero())
            CHECK(entry.degree() == params.d[i] - 1);
        }
      }
    }
  }
}

namespace {

std::uint64_t det_mod_p(FpMat m, const PrimeField& f) {
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < m.cols; ++col) {
    std::size_t piv = col;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < m.cols; ++c)
        std::swap(m.at(piv, c), m.at(col, c));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(col, col));
    std::uint64_t inv = f.inv(m.at(col, col));
    for (std::size_t r = col + 1; r < m.rows; ++r) {
      std::uint64_t factor = f.mul(m.at(r, col), inv);
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(col, c)));
    }
  }
  return det;
}

// Sylvester resultant of two binary forms of degree n.
std::uint64_t resultant_binary(const HomogPoly& a, const HomogPoly& b, int n,
                               const PrimeField& f) {
  auto coeffs = [&](const HomogPoly& p) {
    std::vector<std::uint64_t> c(n + 1, 0);
    for (const auto& [mon, v] : p.terms()) c[mon.e[1]] = v;
    return c;
  };
  auto ca = coeffs(a), cb = coeffs(b);
  FpMat syl(2 * n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= n; ++j) {
      syl.at(r, r + j) = ca[j];
      syl.at(n + r, r + j) = cb[j];
    }
  }
  return det_mod_p(std::move(syl), f);
}

}  // namespace

TEST_CASE("two general binary cubics share no root") {
  // Quartic surface case: the rank-drop locus on the line is the common zero
  // set of two independent cubics, generically empty.
  Parameters params = P(3, 1, {4});
  PrimeField f(101);
  int empty = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CISample sample = sample_ci(params, 101, seed);
    JacobianOnPlane jac = jacobian_on_plane(sample);
    auto pts = rank_drop_points(jac, f);
    CHECK(pts.size() <= 9);  // product bound (d-1)^(m-k)
    if (pts.empty()) ++empty;
    // A nonzero resultant certifies the forms share no root at all, over
    // any extension; the point list must then be empty.
    if (resultant_binary(jac.entries[0][0], jac.entries[0][1], 3, f) != 0)
      CHECK(pts.empty());
  }
  CHECK(empty >= 18);
}

TEST_CASE("two general conics meet in at most four points") {
  Parameters params = P(4, 2, {3});
  PrimeField f(101);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CISample sample = sample_ci(params, 101, seed);
    auto pts = rank_drop_points(jacobian_on_plane(sample), f);
    CHECK(pts.size() <= 4);
    // Reported points are canonical representatives that really drop rank.
    for (const auto& pt : pts) {
      std::size_t lead = 0;
      while (lead < pt.size() && pt[lead] == 0) ++lead;
      REQUIRE(lead < pt.size());
      CHECK(pt[lead] == 1);
    }
  }
}

TEST_CASE("a zero jacobian row drops rank everywhere") {
  // All linear parts vanish; g is pure residual, so P has a zero row.
  Parameters params = P(3, 1, {4});
  PrimeField f(5);
  HomogPoly r0(4, 4);
  r0.add_term(Monomial({2, 0, 1, 1}), 1, f);
  CISample sample = table_sample(params, 5, {}, {r0});
  auto pts = rank_drop_points(jacobian_on_plane(sample), f);
  CHECK(pts.size() == 6);  // all of P^1(F_5)
}

TEST_CASE("point cap refusal") {
  Parameters params = P(4, 2, {3});
  PrimeField f(211);
  CISample sample = sample_ci(params, 211, 0);
  CHECK_THROWS_AS(
      rank_drop_points(jacobian_on_plane(sample), f, PointCaps{100}),
      CapError);
}

TEST_CASE("dimension estimates across the three regimes") {
  std::vector<std::uint64_t> primes{101, 211};

  // Smooth case: empty singular locus.
  SingDimReport smooth = sing_dim_estimate(P(3, 1, {4}), primes, 0, 5);
  CHECK(smooth.status == SingDimReport::Status::estimated);
  CHECK(smooth.estimate == -1);
  CHECK(smooth.expected == -1);
  CHECK(smooth.match);
  CHECK(smooth.bezout_route);

  // Finitely many singular points.
  SingDimReport finite = sing_dim_estimate(P(4, 2, {3}), primes, 0, 5);
  CHECK(finite.status == SingDimReport::Status::estimated);
  CHECK(finite.estimate == 0);
  CHECK(finite.expected == 0);
  CHECK(finite.match);

  // A curve of singular points: counts grow linearly with p.
  SingDimReport curve = sing_dim_estimate(P(4, 2, {2, 2}), primes, 0, 5);
  CHECK(curve.status == SingDimReport::Status::estimated);
  CHECK(curve.estimate == 1);
  CHECK(curve.expected == 1);
  CHECK(curve.match);
  CHECK(curve.totals[1] > curve.totals[0]);
}

TEST_CASE("estimator input validation") {
  CHECK_THROWS_AS(sing_dim_estimate(P(3, 1, {4}), {101}, 0, 5), ParamError);
  CHECK_THROWS_AS(sing_dim_estimate(P(3, 1, {4}), {101, 211}, 0, 0),
                  ParamError);
}
