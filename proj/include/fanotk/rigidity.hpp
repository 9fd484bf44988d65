#ifndef FANOTK_RIGIDITY_HPP
#define FANOTK_RIGIDITY_HPP

#include "fanotk/sampler.hpp"

namespace fanotk {

// Coefficient matrix C of the linear system that tests first-order motions
// of the standard plane inside the sampled complete intersection.
//
// Rows: pairs (i, nu), i ascending, nu descending-lex over the degree-d_i
//   monomials in the k+1 plane variables ("i-major-lex").
// Columns: pairs (h, j), lexicographic on (h, j), h in [k+1, m], j in [0, k].
// Entry ((i, nu), (h, j)) = c^{(h)}_{i, nu - e_j}, zero when nu - e_j has a
// negative component.
struct SigmaMatrix {
  FpMat mat;
  std::vector<std::pair<int, Monomial>> row_index;
  std::vector<std::pair<int, int>> col_index;
  std::uint64_t p = 0;
};

SigmaMatrix build_sigma_matrix(const CISample& sample);

// Exact rank by Gaussian elimination over F_p.
std::size_t rank_ff(const FpMat& m, const PrimeField& f);

struct RigidityReport {
  std::size_t rank = 0;
  std::size_t nullity = 0;  // = h^0 of the normal sheaf of the plane in Y
  bool is_rigid = false;    // rank == (k+1)(m-k): the plane is isolated and reduced
};

RigidityReport rigidity_check(const CISample& sample);

// C * a for a motion vector indexed like the columns of C.
std::vector<std::uint64_t> sigma_apply_matrix(
    const SigmaMatrix& C, const std::vector<std::uint64_t>& a);

// The same map computed by polynomial arithmetic: coefficients of
// sum_{h,j} a_{h,j} y_j p_i^{(h)} read off in the row basis. Must agree with
// sigma_apply_matrix entry for entry.
std::vector<std::uint64_t> sigma_apply_poly(
    const CISample& sample, const std::vector<std::uint64_t>& a);

// One symbolic indeterminate c^{(h)}_{i,mu}; the universe is ordered by the
// index triple (h, i, mu) ascending, mu compared lexicographically.
struct IndetLabel {
  int h;
  int i;
  Monomial mu;
};

struct SymbolicDetReport {
  std::size_t square_size = 0;
  bool det_is_nonzero_poly = false;
  std::size_t term_count = 0;  // monomials with nonzero coefficient
  // Leading monomial under the index-major order: exponent list over the
  // indeterminate universe (only nonzero exponents, ids ascending).
  std::vector<std::pair<std::size_t, int>> leading_monomial;
  long long leading_coeff = 0;
  std::vector<IndetLabel> indets;  // id -> label

  // When the fixed row order yields the zero polynomial (it does exactly
  // when a leading quadric block fills the whole submatrix), the same
  // expansion is repeated with rows interleaved round-robin across the
  // equation blocks and reported here. The fixed order above stays the
  // primary result; this is a diagnostic, not a silent switch.
  bool interleaved_tried = false;
  bool interleaved_nonzero = false;
  long long interleaved_leading_coeff = 0;
};

// Exact determinant of the leading square submatrix of C (its first
// (k+1)(m-k) rows) over the polynomial ring in the c^{(h)}_{i,mu}.
// Requires t >= 0 and (k+1)(m-k) <= 8; throws RegimeError / CapError
// otherwise.
SymbolicDetReport symbolic_det_leading(const Parameters& params);

}  // namespace fanotk

#endif
