#include "fanotk/invariants.hpp"

#include <algorithm>
#include <string>

namespace fanotk {

void Parameters::validate() const {
  int sv = s();
  if (sv < 1) throw ParamError("parameters: need at least one degree d_i");
  if (sv > m - 2)
    throw ParamError("parameters: s <= m-2 violated (s=" + std::to_string(sv) +
                     ", m=" + std::to_string(m) + ")");
  long long prod = 1;
  for (int di : d) {
    if (di < 1) throw ParamError("parameters: every d_i must be >= 1");
    prod = std::min<long long>(prod * di, 1000000);  // saturate, only >2 matters
  }
  if (prod <= 2)
    throw ParamError("parameters: prod d_i > 2 violated (linear/quadric case)");
  if (k < 1) throw ParamError("parameters: k must be >= 1");
  if (k > m - sv)
    throw ParamError("parameters: k <= m-s violated (k=" + std::to_string(k) +
                     ", m-s=" + std::to_string(m - sv) + ")");
}

Int t_invariant(const Parameters& params) {
  Int t = 0;
  for (int di : params.d) t += binom(di + params.k, params.k);
  t -= Int(params.k + 1) * (params.m - params.k);
  return t;
}

Int delta_h(const Parameters& params, int h) {
  if (h < -1 || h > params.k - 1)
    throw ParamError("delta_h: need -1 <= h <= k-1");
  Int v = 0;
  for (int di : params.d) v += binom(di + params.k, params.k);
  if (h >= 0) {
    for (int di : params.d) v -= binom(di + h, h);
  }
  v -= Int(params.k - h) * (params.m + h + 1 - params.k);
  return v;
}

Rat D_value(long long x, int k, int h) {
  if (h < 0 || h > k - 1)
    throw ParamError("D_value: need 0 <= h <= k-1 (h = k divides by zero)");
  if (x < 0) throw ParamError("D_value: x must be nonnegative");
  Rat kh(k - h);
  return Rat(h + 1) / kh * Rat(binom(x + k, k)) -
         Rat(k + 1) / kh * Rat(binom(x + h, h));
}

DimRecord dim_formulas(const Parameters& params, int h) {
  if (h < -1 || h > params.k - 1)
    throw ParamError("dim_formulas: need -1 <= h <= k-1");
  const int m = params.m, k = params.k;
  DimRecord rec;
  rec.dim_S_star = 0;
  for (int di : params.d) rec.dim_S_star += binom(di + m, m);

  rec.dim_J = Int(k + 1) * (m - k);
  for (int di : params.d)
    rec.dim_J += binom(di + m, m) - binom(di + k, k);

  rec.dim_G2h = Int(k + 1) * (m - k) + Int(h + 1) * (k - h) +
                Int(k - h) * (m - k);

  rec.dim_Th = rec.dim_G2h;
  for (int di : params.d) {
    rec.h0_plane.push_back(binom(di + m, m) - binom(di + k, k));
    Int two = binom(di + m, m) - 2 * binom(di + k, k) +
              (h >= 0 ? binom(di + h, h) : Int(0));
    rec.h0_two_planes.push_back(two);
    rec.dim_Th += two;
  }
  return rec;
}

RegimeReport classify(const Parameters& params) {
  RegimeReport rep;
  rep.t = t_invariant(params);
  rep.w_is_proper = rep.t > 0;
  rep.smooth_possible = params.s() <= params.m - 2 * params.k;
  rep.expected_fano_dim = rep.t <= 0 ? -rep.t : Int(0);
  rep.expected_sing_dim =
      std::max(-1, 2 * params.k + params.s() - params.m - 1);
  rep.w_codim = rep.t > 0 ? rep.t : Int(0);
  return rep;
}

void for_each_grid_params(const GridBounds& bounds,
                          const std::function<void(const Parameters&)>& fn) {
  for (int m = 3; m <= bounds.m_max; ++m) {
    for (int s = 1; s <= std::min(bounds.s_max, m - 2); ++s) {
      std::vector<int> d(s, 1);
      for (;;) {
        long long prod = 1;
        for (int di : d) prod *= di;
        if (prod > 2) {
          for (int k = 1; k <= m - s; ++k) {
            Parameters p{m, k, d};
            fn(p);
          }
        }
        // Odometer over degree tuples, last entry fastest.
        int pos = s - 1;
        while (pos >= 0 && d[pos] == bounds.d_max) {
          d[pos] = 1;
          --pos;
        }
        if (pos < 0) break;
        ++d[pos];
      }
    }
  }
}

std::vector<LemmaCounterexample> lemma_scan(const GridBounds& bounds) {
  std::vector<LemmaCounterexample> out;
  for_each_grid_params(bounds, [&](const Parameters& p) {
    Int t = t_invariant(p);
    if (t <= 0) return;
    for (int h = 0; h <= p.k - 1; ++h) {
      Int dh = delta_h(p, h);
      if (dh <= 0) out.push_back({p, h, dh, t});
    }
  });
  return out;
}

}  // namespace fanotk
