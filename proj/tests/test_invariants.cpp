#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanotk/invariants.hpp"

using namespace fanotk;

namespace {

Parameters P(int m, int k, std::vector<int> d) {
  return Parameters{m, k, std::move(d)};
}

// Independently coded copy of the delta formula, used as a cross-check.
Int delta_reference(const Parameters& p, int h) {
  Int acc = 0;
  for (int di : p.d) {
    acc += binom(di + p.k, p.k);
    if (h >= 0) acc -= binom(di + h, h);
  }
  return acc - Int(p.k - h) * (p.m + h + 1 - p.k);
}

}  // namespace

TEST_CASE("parameter validation names the violated constraint") {
  CHECK_NOTHROW(Parameters::checked(3, 1, {4}));
  CHECK_NOTHROW(Parameters::checked(5, 1, {2, 2, 2}));
  CHECK_THROWS_AS(Parameters::checked(3, 1, {1}), ParamError);    // prod <= 2
  CHECK_THROWS_AS(Parameters::checked(3, 1, {2}), ParamError);    // prod <= 2
  CHECK_THROWS_AS(Parameters::checked(3, 1, {}), ParamError);     // s < 1
  CHECK_THROWS_AS(Parameters::checked(4, 1, {2, 2, 2}), ParamError);  // s > m-2
  CHECK_THROWS_AS(Parameters::checked(3, 3, {4}), ParamError);    // k > m-s
  CHECK_NOTHROW(Parameters::checked(3, 2, {4}));                  // k = m-s
  CHECK_THROWS_AS(Parameters::checked(3, 0, {4}), ParamError);    // k < 1
  CHECK_THROWS_AS(Parameters::checked(4, 1, {0, 3}), ParamError); // d_i < 1
}

TEST_CASE("t invariant examples") {
  CHECK(t_invariant(P(3, 1, {3})) == 0);
  CHECK(t_invariant(P(3, 1, {4})) == 1);
  CHECK(t_invariant(P(4, 1, {3})) == -2);
  CHECK(t_invariant(P(5, 1, {2, 2, 2})) == 1);
  CHECK(t_invariant(P(4, 2, {3})) == 4);
}

TEST_CASE("delta_h examples and the h = -1 boundary") {
  CHECK(delta_h(P(3, 1, {4}), 0) == 1);  // 5 - 1 - 1*3
  CHECK(delta_h(P(4, 2, {3}), 1) == delta_reference(P(4, 2, {3}), 1));
  CHECK_THROWS_AS(delta_h(P(3, 1, {4}), 1), ParamError);
  CHECK_THROWS_AS(delta_h(P(3, 1, {4}), -2), ParamError);
}

TEST_CASE("delta at h = -1 equals t on the whole grid") {
  for_each_grid_params(GridBounds{8, 3, 5}, [](const Parameters& p) {
    CHECK(delta_h(p, -1) == t_invariant(p));
  });
}

TEST_CASE("delta matches the independently coded formula on the grid") {
  for_each_grid_params(GridBounds{7, 3, 5}, [](const Parameters& p) {
    for (int h = -1; h <= p.k - 1; ++h)
      CHECK(delta_h(p, h) == delta_reference(p, h));
  });
}

TEST_CASE("D(x) special values") {
  for (int k = 1; k <= 8; ++k) {
    for (int h = 0; h < k; ++h) {
      CHECK(D_value(1, k, h) == 0);
      CHECK(D_value(2, k, h) == Rat((h + 1) * (k + 1), 2));
      CHECK(D_value(3, k, h) == Rat((k + 1) * (h + 1) * (k + h + 5), 6));
    }
  }
  CHECK(D_value(2, 2, 0) == Rat(3, 2));
  CHECK(D_value(3, 1, 0) == 2);
  CHECK_THROWS_AS(D_value(2, 2, 2), ParamError);  // h = k
  CHECK_THROWS_AS(D_value(-1, 2, 0), ParamError);
}

TEST_CASE("D(x) is increasing and positive for x > 1") {
  for (int k = 1; k <= 6; ++k) {
    for (int h = 0; h < k; ++h) {
      Rat prev = D_value(1, k, h);
      for (int x = 2; x <= 10; ++x) {
        Rat cur = D_value(x, k, h);
        CHECK(cur > 0);
        CHECK(cur > prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("dimension record examples") {
  DimRecord rec = dim_formulas(P(3, 1, {4}), 0);
  CHECK(rec.dim_S_star == 35);
  CHECK(rec.dim_J == 34);
  REQUIRE(rec.h0_two_planes.size() == 1);
  CHECK(rec.h0_two_planes[0] == 26);  // 35 - 2*5 + 1
  REQUIRE(rec.h0_plane.size() == 1);
  CHECK(rec.h0_plane[0] == 30);

  // Two lines in P^3 meeting in a point lie on exactly one plane: the count
  // of containing hyperplanes must be 1.
  DimRecord classical = dim_formulas(P(3, 1, {1}), 0);
  CHECK(classical.h0_two_planes[0] == 1);  // 4 - 4 + 1

  CHECK_THROWS_AS(dim_formulas(P(3, 1, {4}), 1), ParamError);
}

TEST_CASE("classification examples") {
  RegimeReport a = classify(P(3, 1, {4}));
  CHECK(a.t == 1);
  CHECK(a.w_is_proper);
  CHECK(a.smooth_possible);
  CHECK(a.expected_sing_dim == -1);
  CHECK(a.w_codim == 1);
  CHECK(a.expected_fano_dim == 0);

  RegimeReport b = classify(P(4, 2, {3}));
  CHECK(b.t == 4);
  CHECK_FALSE(b.smooth_possible);  // s = 1 > m - 2k = 0
  CHECK(b.expected_sing_dim == 0);

  RegimeReport c = classify(P(4, 1, {3}));
  CHECK(c.t == -2);
  CHECK(c.expected_fano_dim == 2);
  CHECK(c.w_codim == 0);
  CHECK_FALSE(c.w_is_proper);
}

TEST_CASE("dimension identities across the grid") {
  for_each_grid_params(GridBounds{8, 3, 5}, [](const Parameters& p) {
    Int t = t_invariant(p);
    RegimeReport reg = classify(p);
    CHECK(reg.smooth_possible == (reg.expected_sing_dim == -1));
    for (int h = -1; h <= p.k - 1; ++h) {
      DimRecord rec = dim_formulas(p, h);
      CHECK(rec.dim_J == rec.dim_S_star - t);
      CHECK(rec.dim_Th == rec.dim_J - delta_h(p, h));
    }
  });
}

TEST_CASE("lemma scan finds no counterexamples") {
  CHECK(lemma_scan(GridBounds{10, 4, 6}).empty());
  // A grid where the hypothesis never fires is trivially clean.
  CHECK(lemma_scan(GridBounds{3, 1, 4}).empty());
  // d_max = 1 admits no valid parameters at all (prod d_i > 2 fails).
  CHECK(lemma_scan(GridBounds{6, 3, 1}).empty());
}

TEST_CASE("grid iteration honours the parameter invariants") {
  int count = 0;
  for_each_grid_params(GridBounds{6, 3, 4}, [&](const Parameters& p) {
    CHECK_NOTHROW(p.validate());
    CHECK(p.m <= 6);
    CHECK(p.s() <= 3);
    for (int di : p.d) CHECK(di <= 4);
    ++count;
  });
  CHECK(count > 0);
}
