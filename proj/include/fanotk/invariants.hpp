#ifndef FANOTK_INVARIANTS_HPP
#define FANOTK_INVARIANTS_HPP

#include <functional>
#include <vector>

#include "fanotk/integers.hpp"

namespace fanotk {

// The tuple (m, k, d_1..d_s) describing complete intersections of
// multidegree d in P^m together with the dimension k of the linear
// subspaces under study.
struct Parameters {
  int m = 0;
  int k = 0;
  std::vector<int> d;

  int s() const { return static_cast<int>(d.size()); }

  // Enforces 1 <= s <= m-2, every d_i >= 1 with prod d_i > 2, and
  // 1 <= k <= m-s. Throws ParamError naming the violated constraint.
  void validate() const;

  static Parameters checked(int m, int k, std::vector<int> d) {
    Parameters p{m, k, std::move(d)};
    p.validate();
    return p;
  }
};

// Closed-form regime data derived from the parameters alone.
struct RegimeReport {
  Int t;
  bool w_is_proper;        // t > 0: containing a k-plane is a proper condition
  bool smooth_possible;    // s <= m - 2k
  Int expected_fano_dim;   // -t when t <= 0, else 0
  int expected_sing_dim;   // max(-1, 2k + s - m - 1)
  Int w_codim;             // t when t > 0, else 0
};

// sum_i binom(d_i + k, k) - (k+1)(m-k). Its sign splits the two regimes.
Int t_invariant(const Parameters& params);

// sum_i binom(d_i+k,k) - sum_i binom(d_i+h,h) - (k-h)(m+h+1-k) for
// -1 <= h <= k-1, with binom(., -1) taken as 0 so that delta_{-1} = t.
Int delta_h(const Parameters& params, int h);

// D(x) = (h+1)/(k-h) * binom(x+k,k) - (k+1)/(k-h) * binom(x+h,h),
// exact rational, 0 <= h <= k-1.
Rat D_value(long long x, int k, int h);

// Dimension bookkeeping for the incidence varieties. Every field is
// computed from its own displayed formula so the identities relating them
// stay meaningful checks.
struct DimRecord {
  Int dim_S_star;              // sum_i binom(d_i+m, m)
  Int dim_J;                   // (k+1)(m-k) + sum binom(d_i+m,m) - sum binom(d_i+k,k)
  Int dim_G2h;                 // (k+1)(m-k) + (h+1)(k-h) + (k-h)(m-k)
  Int dim_Th;                  // dim_G2h + sum of h0_two_planes
  std::vector<Int> h0_plane;        // per d_i: binom(d_i+m,m) - binom(d_i+k,k)
  std::vector<Int> h0_two_planes;   // per d_i: binom(d_i+m,m) - 2 binom(d_i+k,k) + binom(d_i+h,h)
};

// Valid for -1 <= h <= k-1 (h = -1 uses the binom(., -1) = 0 convention).
DimRecord dim_formulas(const Parameters& params, int h);

RegimeReport classify(const Parameters& params);

// Exhaustive scan bounds; the defaults cover every sign regime in well under
// a second.
struct GridBounds {
  int m_max = 10;
  int s_max = 4;
  int d_max = 6;
};

// Calls fn for every valid Parameters value within the bounds
// (m <= m_max, 1 <= s <= s_max, 1 <= d_i <= d_max, prod d_i > 2, k <= m-s).
void for_each_grid_params(const GridBounds& bounds,
                          const std::function<void(const Parameters&)>& fn);

struct LemmaCounterexample {
  Parameters params;
  int h;
  Int delta;
  Int t;
};

// Every (params, h) in the grid with delta_h <= 0 yet t > 0. Expected empty.
std::vector<LemmaCounterexample> lemma_scan(const GridBounds& bounds);

}  // namespace fanotk

#endif
