#include "fanotk/fano.hpp"

#include <algorithm>
#include <sstream>

namespace fanotk {

PlaneRREF PlaneRREF::from_matrix(FpMat m, const PrimeField& f) {
  std::size_t rows = m.rows;
  auto pivots = rref_in_place(m, f);
  if (pivots.size() != rows)
    throw ParamError("PlaneRREF: matrix does not have full row rank");
  return PlaneRREF{std::move(m), std::move(pivots)};
}

PlaneRREF standard_plane(int m, int k) {
  FpMat basis(k + 1, m + 1);
  std::vector<std::size_t> pivots;
  for (int i = 0; i <= k; ++i) {
    basis.at(i, i) = 1;
    pivots.push_back(i);
  }
  return PlaneRREF{std::move(basis), std::move(pivots)};
}

Int count_planes(int m, int k, std::uint64_t q) {
  return gaussian_binom(m + 1, k + 1, Int(q));
}

void enumerate_planes(int m, int k, std::uint64_t q,
                      const EnumerationCaps& caps,
                      const std::function<void(const PlaneRREF&)>& emit) {
  if (k < 0 || k > m) throw ParamError("enumerate_planes: need 0 <= k <= m");
  Int total = count_planes(m, k, q);
  if (total > caps.max_planes) {
    std::ostringstream os;
    os << total;
    throw CapError("enumerate_planes: projected count " + os.str() +
                       " exceeds cap " + std::to_string(caps.max_planes),
                   os.str());
  }

  const int rows = k + 1, cols = m + 1;
  std::vector<int> piv(rows);
  for (int i = 0; i < rows; ++i) piv[i] = i;

  for (;;) {
    std::vector<bool> is_pivot(cols, false);
    for (int c : piv) is_pivot[c] = true;
    // Row-major free positions: right of the row's pivot, not a pivot column.
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < rows; ++r) {
      for (int c = piv[r] + 1; c < cols; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(r, c);
    }

    PlaneRREF plane;
    plane.basis = FpMat(rows, cols);
    plane.pivot_cols.assign(piv.begin(), piv.end());
    for (int r = 0; r < rows; ++r) plane.basis.at(r, piv[r]) = 1;

    std::vector<std::uint64_t> vals(free_pos.size(), 0);
    for (;;) {
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        plane.basis.at(free_pos[t].first, free_pos[t].second) = vals[t];
      emit(plane);
      // Odometer, last position fastest.
      std::size_t pos = vals.size();
      while (pos > 0 && vals[pos - 1] == q - 1) vals[--pos] = 0;
      if (pos == 0) break;
      ++vals[pos - 1];
    }

    // Next pivot-column combination in ascending lex.
    int i = rows - 1;
    while (i >= 0 && piv[i] == cols - rows + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < rows; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<PlaneRREF> enumerate_planes_vec(int m, int k, std::uint64_t q,
                                            const EnumerationCaps& caps) {
  std::vector<PlaneRREF> out;
  enumerate_planes(m, k, q, caps,
                   [&](const PlaneRREF& p) { out.push_back(p); });
  return out;
}

bool contains_plane(const CISample& sample, const PlaneRREF& plane,
                    const PrimeField& f) {
  for (const auto& gi : sample.g) {
    if (!substitute_linear(gi, plane.basis, f).is_zero()) return false;
  }
  return true;
}

bool contains_plane(const CISample& sample, const PlaneRREF& plane) {
  PrimeField f(sample.p);
  return contains_plane(sample, plane, f);
}

FanoResult fano_points(const CISample& sample, std::uint64_t q,
                       const EnumerationCaps& caps) {
  if (sample.p != q)
    throw ParamError("fano_points: sample was drawn over a different field");
  PrimeField f(q);
  const PlaneRREF std_plane = standard_plane(sample.params.m, sample.params.k);
  FanoResult result;
  enumerate_planes(sample.params.m, sample.params.k, q, caps,
                   [&](const PlaneRREF& plane) {
                     if (!contains_plane(sample, plane, f)) return;
                     if (plane == std_plane) result.contains_standard = true;
                     result.planes.push_back(plane);
                   });
  result.count = result.planes.size();
  return result;
}

}  // namespace fanotk
