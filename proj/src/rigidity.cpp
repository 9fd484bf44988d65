#include "fanotk/rigidity.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace fanotk {

namespace {

std::vector<std::pair<int, Monomial>> sigma_row_index(
    const Parameters& params) {
  std::vector<std::pair<int, Monomial>> rows;
  for (int i = 1; i <= params.s(); ++i) {
    for (const auto& nu : monomials_lex(params.k + 1, params.d[i - 1]))
      rows.emplace_back(i, nu);
  }
  return rows;
}

std::vector<std::pair<int, int>> sigma_col_index(const Parameters& params) {
  std::vector<std::pair<int, int>> cols;
  for (int h = params.k + 1; h <= params.m; ++h) {
    for (int j = 0; j <= params.k; ++j) cols.emplace_back(h, j);
  }
  return cols;
}

// nu - e_j, or nullopt-style failure flag when improper.
bool shift_down(const Monomial& nu, int j, Monomial& out) {
  if (nu.e[j] == 0) return false;
  out = nu;
  out.e[j] -= 1;
  return true;
}

}  // namespace

SigmaMatrix build_sigma_matrix(const CISample& sample) {
  const Parameters& params = sample.params;
  SigmaMatrix C;
  C.p = sample.p;
  C.row_index = sigma_row_index(params);
  C.col_index = sigma_col_index(params);
  C.mat = FpMat(C.row_index.size(), C.col_index.size());
  for (std::size_t r = 0; r < C.row_index.size(); ++r) {
    const auto& [i, nu] = C.row_index[r];
    for (std::size_t cc = 0; cc < C.col_index.size(); ++cc) {
      const auto& [h, j] = C.col_index[cc];
      Monomial mu;
      if (!shift_down(nu, j, mu)) continue;  // improper shift: entry stays 0
      C.mat.at(r, cc) = sample.c.at({i, h, mu});
    }
  }
  return C;
}

std::size_t rank_ff(const FpMat& m, const PrimeField& f) {
  return rank_mod_p(m, f);
}

RigidityReport rigidity_check(const CISample& sample) {
  PrimeField f(sample.p);
  SigmaMatrix C = build_sigma_matrix(sample);
  RigidityReport rep;
  rep.rank = rank_ff(C.mat, f);
  rep.nullity = C.mat.cols - rep.rank;
  rep.is_rigid = rep.rank == C.mat.cols;
  return rep;
}

std::vector<std::uint64_t> sigma_apply_matrix(
    const SigmaMatrix& C, const std::vector<std::uint64_t>& a) {
  PrimeField f(C.p);
  return mat_vec(C.mat, a, f);
}

std::vector<std::uint64_t> sigma_apply_poly(
    const CISample& sample, const std::vector<std::uint64_t>& a) {
  const Parameters& params = sample.params;
  PrimeField f(sample.p);
  auto cols = sigma_col_index(params);
  if (a.size() != cols.size())
    throw ParamError("sigma_apply_poly: motion vector size mismatch");

  std::vector<std::uint64_t> out;
  for (int i = 1; i <= params.s(); ++i) {
    HomogPoly image(params.k + 1, params.d[i - 1]);
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
      if (a[idx] == 0) continue;
      const auto& [h, j] = cols[idx];
      HomogPoly term =
          HomogPoly::variable(params.k + 1, j)
              .mul(linear_part(sample.c, i, h, params, f), f)
              .scale(a[idx], f);
      image = image.add(term, f);
    }
    for (const auto& nu : monomials_lex(params.k + 1, params.d[i - 1]))
      out.push_back(image.coeff(nu));
  }
  return out;
}

namespace {

// Ascending order on the index triples (h, i, mu): h, then i, then mu in
// ascending lex.
bool indet_label_less(const IndetLabel& a, const IndetLabel& b) {
  if (a.h != b.h) return a.h < b.h;
  if (a.i != b.i) return a.i < b.i;
  return lex_less(a.mu, b.mu);
}

struct DetExpansion {
  bool nonzero = false;
  std::size_t term_count = 0;
  std::vector<std::pair<std::size_t, int>> leading_monomial;
  long long leading_coeff = 0;
};

// Exact permutation expansion of the square structural matrix whose rows are
// given explicitly. Terms are exponent vectors over the indeterminate
// universe; coefficients are exact signed sums.
DetExpansion expand_det(
    const Parameters& params,
    const std::vector<std::pair<int, Monomial>>& rows,
    const std::map<std::tuple<int, int, std::vector<int>>, std::size_t>&
        indet_id,
    std::size_t universe_size) {
  const std::size_t n = rows.size();
  auto cols = sigma_col_index(params);
  constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> entry(
      n, std::vector<std::size_t>(n, kEmpty));
  for (std::size_t r = 0; r < n; ++r) {
    const auto& [i, nu] = rows[r];
    for (std::size_t cc = 0; cc < n; ++cc) {
      const auto& [h, j] = cols[cc];
      Monomial mu;
      if (!shift_down(nu, j, mu)) continue;
      entry[r][cc] = indet_id.at({h, i, mu.e});
    }
  }

  std::map<std::vector<int>, long long> det;
  std::vector<int> expo(universe_size, 0);
  std::vector<bool> used(n, false);
  auto expand = [&](auto&& self, std::size_t row, int sign_swaps) -> void {
    if (row == n) {
      det[expo] += (sign_swaps % 2 == 0) ? 1 : -1;
      return;
    }
    for (std::size_t cc = 0; cc < n; ++cc) {
      if (used[cc] || entry[row][cc] == kEmpty) continue;
      used[cc] = true;
      expo[entry[row][cc]] += 1;
      // Parity of the permutation: count inversions incrementally.
      int inv = 0;
      for (std::size_t prev = cc + 1; prev < n; ++prev)
        if (used[prev]) ++inv;
      self(self, row + 1, sign_swaps + inv);
      expo[entry[row][cc]] -= 1;
      used[cc] = false;
    }
  };
  expand(expand, 0, 0);

  DetExpansion out;
  std::erase_if(det, [](const auto& kv) { return kv.second == 0; });
  out.nonzero = !det.empty();
  out.term_count = det.size();
  if (!det.empty()) {
    // Greatest monomial: exponents compared position-by-position along the
    // ascending indeterminate order, larger exponent first wins.
    auto best = det.begin();
    for (auto it = std::next(det.begin()); it != det.end(); ++it) {
      if (std::lexicographical_compare(best->first.begin(), best->first.end(),
                                       it->first.begin(), it->first.end()))
        best = it;
    }
    out.leading_coeff = best->second;
    for (std::size_t id = 0; id < best->first.size(); ++id) {
      if (best->first[id] != 0)
        out.leading_monomial.emplace_back(id, best->first[id]);
    }
  }
  return out;
}

}  // namespace

SymbolicDetReport symbolic_det_leading(const Parameters& params) {
  params.validate();
  Int t = t_invariant(params);
  if (t < 0)
    throw RegimeError(
        "symbolic_det_leading: t < 0, the leading submatrix is not square");
  const std::size_t n =
      static_cast<std::size_t>(params.k + 1) * (params.m - params.k);
  if (n > 8)
    throw CapError("symbolic_det_leading: out of tiny-scale range",
                   std::to_string(n));

  // Indeterminate universe, ascending (h, i, mu).
  std::vector<IndetLabel> indets;
  for (int i = 1; i <= params.s(); ++i) {
    auto mus = monomials_lex(params.k + 1, params.d[i - 1] - 1);
    for (int h = params.k + 1; h <= params.m; ++h) {
      for (const auto& mu : mus) indets.push_back({h, i, mu});
    }
  }
  std::sort(indets.begin(), indets.end(), indet_label_less);
  std::map<std::tuple<int, int, std::vector<int>>, std::size_t> indet_id;
  for (std::size_t id = 0; id < indets.size(); ++id)
    indet_id[{indets[id].h, indets[id].i, indets[id].mu.e}] = id;

  auto all_rows = sigma_row_index(params);
  std::vector<std::pair<int, Monomial>> first_rows(all_rows.begin(),
                                                   all_rows.begin() + n);
  DetExpansion primary = expand_det(params, first_rows, indet_id,
                                    indets.size());

  SymbolicDetReport rep;
  rep.square_size = n;
  rep.indets = indets;
  rep.det_is_nonzero_poly = primary.nonzero;
  rep.term_count = primary.term_count;
  rep.leading_monomial = primary.leading_monomial;
  rep.leading_coeff = primary.leading_coeff;

  if (!primary.nonzero) {
    // Happens when the rows of a single degree-2 block fill the whole
    // submatrix: the products y_j * (linear form) satisfy a syzygy, so that
    // minor is identically singular even though the full matrix is not.
    // Try rows interleaved round-robin across the equation blocks.
    std::vector<std::vector<std::pair<int, Monomial>>> blocks(params.s());
    for (const auto& row : all_rows) blocks[row.first - 1].push_back(row);
    std::vector<std::pair<int, Monomial>> interleaved;
    for (std::size_t pos = 0; interleaved.size() < n; ++pos) {
      for (const auto& block : blocks) {
        if (pos < block.size() && interleaved.size() < n)
          interleaved.push_back(block[pos]);
      }
    }
    DetExpansion alt = expand_det(params, interleaved, indet_id,
                                  indets.size());
    rep.interleaved_tried = true;
    rep.interleaved_nonzero = alt.nonzero;
    rep.interleaved_leading_coeff = alt.leading_coeff;
  }
  return rep;
}

}  // namespace fanotk
