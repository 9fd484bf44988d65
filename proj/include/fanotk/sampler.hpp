#ifndef FANOTK_SAMPLER_HPP
#define FANOTK_SAMPLER_HPP

#include <cstdint>
#include <functional>
#include <map>

#include "fanotk/invariants.hpp"
#include "fanotk/poly.hpp"
#include "fanotk/rng.hpp"

namespace fanotk {

// Index of one coefficient c^{(h)}_{i,mu}: equation i (1-based), plane-normal
// variable h in [k+1, m], and a degree-(d_i - 1) monomial mu in the plane
// variables y_0..y_k. Canonical order: i ascending, h ascending, mu
// descending-lex. That order is also the draw order and the serialization
// order, so it is part of the replay contract.
struct CoeffKey {
  int i;
  int h;
  Monomial mu;

  bool operator==(const CoeffKey& o) const {
    return i == o.i && h == o.h && mu == o.mu;
  }
};

struct CoeffKeyLess {
  bool operator()(const CoeffKey& a, const CoeffKey& b) const {
    if (a.i != b.i) return a.i < b.i;
    if (a.h != b.h) return a.h < b.h;
    return lex_greater(a.mu, b.mu);
  }
};

using CoeffTable = std::map<CoeffKey, std::uint64_t, CoeffKeyLess>;

// A sampled complete intersection through the standard plane
// {y_{k+1} = ... = y_m = 0}:
//   g_i = sum_{h>k} y_h * p_i^{(h)} + r_i
// with p_i^{(h)} encoded by the c table and r_i supported on monomials of
// degree >= 2 in y_{k+1..m}. Reconstructible bit-exactly from
// (params, p, seed).
struct CISample {
  Parameters params;
  std::uint64_t p = 0;
  std::uint64_t seed = 0;
  CoeffTable c;                // complete table, zero values included
  std::vector<HomogPoly> r;    // s entries, m+1 variables
  std::vector<HomogPoly> g;    // s entries, m+1 variables

  bool is_degenerate() const {
    for (const auto& gi : g)
      if (gi.is_zero()) return true;
    return false;
  }
};

// The canonical key sequence for the c table of the given parameters.
std::vector<CoeffKey> coefficient_keys(const Parameters& params);

// p_i^{(h)} as a polynomial in the k+1 plane variables (i is 1-based).
HomogPoly linear_part(const CoeffTable& c, int i, int h,
                      const Parameters& params, const PrimeField& f);

// g_i = sum_{h>k} y_h * p_i^{(h)} + r_i, expanded and canonicalized.
// The c table must carry exactly the canonical key set; r_i must be
// supported on the degree-(d_i) monomial basis of the squared plane ideal.
std::vector<HomogPoly> assemble_g(const CoeffTable& c,
                                  const std::vector<HomogPoly>& r,
                                  const Parameters& params,
                                  const PrimeField& f);

// Draws a "general" member: coefficients i.i.d. uniform over F_p from
// SplitMix64 seeded with the given seed. Stream order: the whole c table in
// canonical key order, then the r_i coefficients (i ascending, monomials
// descending-lex). A draw in which some g_i assembles to the zero polynomial
// is rejected and redrawn from the next attempt stream; see
// attempt_stream_seed.
CISample sample_ci(const Parameters& params, std::uint64_t p,
                   std::uint64_t seed);

namespace detail {

// One draw attempt from an arbitrary element source; returns false when some
// assembled g_i is zero (caller then moves to the next attempt stream).
bool draw_sample_attempt(const Parameters& params, const PrimeField& f,
                         const std::function<std::uint64_t()>& next_element,
                         CoeffTable& c, std::vector<HomogPoly>& r,
                         std::vector<HomogPoly>& g);

}  // namespace detail

}  // namespace fanotk

#endif
