#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "fanotk/fano.hpp"
#include "fanotk/sampler.hpp"

using namespace fanotk;

namespace {

Parameters P(int m, int k, std::vector<int> d) {
  return Parameters{m, k, std::move(d)};
}

CoeffTable zero_table(const Parameters& params) {
  CoeffTable c;
  for (const auto& key : coefficient_keys(params)) c.emplace(key, 0);
  return c;
}

std::vector<HomogPoly> zero_residuals(const Parameters& params) {
  std::vector<HomogPoly> r;
  for (int di : params.d) r.emplace_back(params.m + 1, di);
  return r;
}

std::string fixture_path(const char* name) {
  return std::string(FANOTK_SOURCE_DIR) + "/tests/fixtures/" + name;
}

}  // namespace

TEST_CASE("every sampled equation vanishes on the standard plane") {
  for (auto& [m, k, d] : std::vector<std::tuple<int, int, std::vector<int>>>{
           {3, 1, {4}}, {4, 2, {3}}, {5, 1, {2, 2, 2}}, {4, 1, {3}}}) {
    Parameters params = P(m, k, d);
    PrimeField f(101);
    CISample sample = sample_ci(params, 101, 7);
    PlaneRREF plane = standard_plane(m, k);
    for (const auto& gi : sample.g) {
      CHECK(gi.degree() > 0);
      CHECK_FALSE(gi.is_zero());
      CHECK(substitute_linear(gi, plane.basis, f).is_zero());
      // Membership in the plane ideal, monomial by monomial.
      for (const auto& [mon, coeff] : gi.terms()) {
        int tail = 0;
        for (int i = k + 1; i <= m; ++i) tail += mon.e[i];
        CHECK(tail >= 1);
      }
    }
  }
}

TEST_CASE("sampling is deterministic in (params, p, seed)") {
  Parameters params = P(3, 1, {4});
  CISample a = sample_ci(params, 7, 0);
  CISample b = sample_ci(params, 7, 0);
  CHECK(a.c == b.c);
  CHECK(a.r == b.r);
  CHECK(a.g == b.g);
  CISample c = sample_ci(params, 7, 1);
  CHECK_FALSE(a.c == c.c);
}

TEST_CASE("draw count matches the plane-ideal dimension") {
  Parameters params = P(3, 1, {4});
  CISample sample = sample_ci(params, 1009, 123);
  std::size_t c_count = coefficient_keys(params).size();
  std::size_t r_basis = ideal_plane_bases(4, 3, 1).ideal_sq.size();
  CHECK(c_count == 8);   // (m-k) * binom(d-1+k, k)
  CHECK(r_basis == 22);
  CHECK(c_count + r_basis == 30);  // h^0 of the twisted plane ideal
  CHECK(sample.c.size() == c_count);
}

TEST_CASE("one-term assembly") {
  Parameters params = P(3, 1, {4});
  PrimeField f(7);
  CoeffTable c = zero_table(params);
  c[{1, 2, Monomial({3, 0})}] = 1;
  auto g = assemble_g(c, zero_residuals(params), params, f);
  REQUIRE(g.size() == 1);
  CHECK(g[0].render() == "y0^3*y2");
}

TEST_CASE("all-zero coefficients assemble to the degenerate zero sample") {
  Parameters params = P(3, 1, {4});
  PrimeField f(7);
  auto g = assemble_g(zero_table(params), zero_residuals(params), params, f);
  CHECK(g[0].is_zero());
  CISample sample;
  sample.params = params;
  sample.p = 7;
  sample.c = zero_table(params);
  sample.r = zero_residuals(params);
  sample.g = g;
  CHECK(sample.is_degenerate());
}

TEST_CASE("assembly rejects incomplete tables and stray residuals") {
  Parameters params = P(3, 1, {4});
  PrimeField f(7);
  CoeffTable c = zero_table(params);
  c.erase(c.begin());
  CHECK_THROWS_AS(assemble_g(c, zero_residuals(params), params, f),
                  ParamError);

  // Residual term of flat degree 1 in the normal variables is not allowed.
  auto r = zero_residuals(params);
  r[0].add_term(Monomial({3, 0, 1, 0}), 1, f);
  CHECK_THROWS_AS(assemble_g(zero_table(params), r, params, f), ParamError);
}

TEST_CASE("degree-one part of g recovers the coefficient table") {
  Parameters params = P(4, 2, {3});
  PrimeField f(1009);
  CISample sample = sample_ci(params, 1009, 99);
  for (int i = 1; i <= params.s(); ++i) {
    for (int h = params.k + 1; h <= params.m; ++h) {
      // Collect the terms of g_i with exactly one power of y_h and none of
      // the other normal variables, then strip y_h.
      HomogPoly expected = linear_part(sample.c, i, h, params, f);
      HomogPoly got(params.k + 1, params.d[i - 1] - 1);
      for (const auto& [mon, coeff] : sample.g[i - 1].terms()) {
        int tail = 0;
        for (int j = params.k + 1; j <= params.m; ++j) tail += mon.e[j];
        if (tail != 1 || mon.e[h] != 1) continue;
        got.add_term(
            Monomial(std::vector<int>(mon.e.begin(),
                                      mon.e.begin() + params.k + 1)),
            coeff, f);
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("zero draws are rejected and redrawn") {
  Parameters params = P(3, 1, {3});
  PrimeField f(2);
  CoeffTable c;
  std::vector<HomogPoly> r, g;
  // An all-zero source must be reported as a failed attempt...
  CHECK_FALSE(detail::draw_sample_attempt(params, f, [] { return 0; }, c, r,
                                          g));
  CHECK(g[0].is_zero());
  // ...while a constant-one source succeeds.
  CHECK(detail::draw_sample_attempt(params, f, [] { return 1; }, c, r, g));
  CHECK_FALSE(g[0].is_zero());
  // The public sampler never returns a degenerate sample.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK_FALSE(sample_ci(params, 2, seed).is_degenerate());
  }
}

TEST_CASE("fixed-seed sample matches the golden fixture") {
  Parameters params = P(3, 1, {4});
  CISample sample = sample_ci(params, 7, 0);
  std::ifstream in(fixture_path("golden_sample_m3k1d4_p7_seed0.txt"));
  REQUIRE(in.good());
  std::string expected((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  while (!expected.empty() && expected.back() == '\n') expected.pop_back();
  CHECK(sample.g[0].render() == expected);
}
