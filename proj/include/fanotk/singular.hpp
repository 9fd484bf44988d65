#ifndef FANOTK_SINGULAR_HPP
#define FANOTK_SINGULAR_HPP

#include "fanotk/sampler.hpp"

namespace fanotk {

// The nonzero block of the Jacobian of (g_1..g_s) along the standard plane:
// entry (i, h) is p_i^{(h)} in the k+1 plane variables. The derivative block
// in the plane directions restricts to zero there.
struct JacobianOnPlane {
  std::vector<std::vector<HomogPoly>> entries;  // s rows, m-k columns
  int s = 0;
  int m = 0;
  int k = 0;
};

// Extracts P from the coefficient table and cross-checks it against
// polynomial differentiation restricted to the plane. A mismatch between the
// two routes throws InternalError.
JacobianOnPlane jacobian_on_plane(const CISample& sample);

struct PointCaps {
  std::uint64_t max_points = 1'000'000;
};

// Canonical representatives (first nonzero coordinate 1) of the points of
// P^k(F_p) where the evaluated matrix P(y) has rank < s, in enumeration
// order.
std::vector<std::vector<std::uint64_t>> rank_drop_points(
    const JacobianOnPlane& jac, const PrimeField& f,
    const PointCaps& caps = {});

// Dimension estimate for the rank-drop locus from rational point counts at
// several primes. This is a documented heuristic, not a proof; raw counts
// are always reported alongside.
struct SingDimReport {
  std::vector<std::uint64_t> primes;
  std::uint64_t family_base = 0;
  int family_size = 0;
  // counts[prime index][seed index]
  std::vector<std::vector<std::size_t>> counts;
  std::vector<std::size_t> totals;  // per prime, summed over the family

  enum class Status { estimated, inconclusive };
  Status status = Status::inconclusive;
  int estimate = 0;  // meaningful only when status == estimated
  int expected = 0;  // max(-1, 2k+s-m-1)
  bool match = false;

  bool bezout_route = false;     // s == 1 with all counts within the bound
  long long bezout_bound = 0;    // (d_1 - 1)^(m-k), set when s == 1
};

// Runs the rank-drop count at every prime for the seed family
// {family_base, ..., family_base + family_size - 1} and estimates the locus
// dimension:
//   - s == 1 and every count within the Bezout bound: the locus has
//     dimension <= 0; it is called 0 when at least a quarter of the
//     (prime, seed) draws see a point, -1 otherwise.
//   - all counts zero: -1.
//   - counts bounded across primes (next <= max(1.5 * prev, prev + 3)): 0.
//   - counts shrinking beyond that tolerance, or growth that rounds below 1:
//     inconclusive.
//   - otherwise: round(log(total_last / total_first) / log(p_last / p_first)).
SingDimReport sing_dim_estimate(const Parameters& params,
                                const std::vector<std::uint64_t>& primes,
                                std::uint64_t family_base, int family_size,
                                const PointCaps& caps = {});

}  // namespace fanotk

#endif
