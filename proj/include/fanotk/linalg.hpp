#ifndef FANOTK_LINALG_HPP
#define FANOTK_LINALG_HPP

#include <cstdint>
#include <vector>

#include "fanotk/ff.hpp"

namespace fanotk {

// Dense row-major matrix over a prime field. Entries are canonical
// representatives in [0, p); the field itself is passed to operations.
struct FpMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> a;

  FpMat() = default;
  FpMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }

  static FpMat identity(std::size_t n) {
    FpMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const FpMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// Reduce to reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref_in_place(FpMat& m, const PrimeField& f);

std::size_t rank_mod_p(FpMat m, const PrimeField& f);

std::vector<std::uint64_t> mat_vec(const FpMat& m,
                                   const std::vector<std::uint64_t>& v,
                                   const PrimeField& f);

}  // namespace fanotk

#endif
