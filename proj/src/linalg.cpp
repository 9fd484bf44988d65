#include "fanotk/linalg.hpp"

namespace fanotk {

std::vector<std::size_t> rref_in_place(FpMat& m, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols; ++c)
        std::swap(m.at(piv, c), m.at(row, c));
    }
    std::uint64_t inv = f.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols; ++c)
      m.at(row, c) = f.mul(m.at(row, c), inv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      std::uint64_t factor = m.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank_mod_p(FpMat m, const PrimeField& f) {
  return rref_in_place(m, f).size();
}

std::vector<std::uint64_t> mat_vec(const FpMat& m,
                                   const std::vector<std::uint64_t>& v,
                                   const PrimeField& f) {
  if (v.size() != m.cols) throw ParamError("mat_vec: size mismatch");
  std::vector<std::uint64_t> out(m.rows, 0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < m.cols; ++c)
      acc = f.add(acc, f.mul(m.at(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

}  // namespace fanotk
