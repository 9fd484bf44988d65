#ifndef FANOTK_FANO_HPP
#define FANOTK_FANO_HPP

#include <functional>

#include "fanotk/sampler.hpp"

namespace fanotk {

// A k-plane in P^m over F_q as the reduced row echelon basis of the
// corresponding (k+1)-dimensional row space. RREF is canonical, so plane
// equality is matrix equality.
struct PlaneRREF {
  FpMat basis;  // (k+1) x (m+1)
  std::vector<std::size_t> pivot_cols;

  bool operator==(const PlaneRREF& o) const { return basis == o.basis; }

  // Canonicalizes an arbitrary full-row-rank parameterization.
  static PlaneRREF from_matrix(FpMat m, const PrimeField& f);
};

PlaneRREF standard_plane(int m, int k);

struct EnumerationCaps {
  std::uint64_t max_planes = 10'000'000;
};

// Total number of k-planes in P^m over F_q.
Int count_planes(int m, int k, std::uint64_t q);

// Emits every k-plane of P^m(F_q) exactly once, in a fixed order: pivot
// column sets ascending lex, then free entries ascending lex (last free
// position fastest). Refuses with CapError when the projected count exceeds
// the cap.
void enumerate_planes(int m, int k, std::uint64_t q,
                      const EnumerationCaps& caps,
                      const std::function<void(const PlaneRREF&)>& emit);

std::vector<PlaneRREF> enumerate_planes_vec(
    int m, int k, std::uint64_t q, const EnumerationCaps& caps = {});

// Symbolic containment: every g_i pulls back to the identically-zero
// polynomial on the plane. Pointwise vanishing is not enough over tiny
// fields, so the test substitutes and compares with zero.
bool contains_plane(const CISample& sample, const PlaneRREF& plane);
bool contains_plane(const CISample& sample, const PlaneRREF& plane,
                    const PrimeField& f);

struct FanoResult {
  std::vector<PlaneRREF> planes;  // in enumeration order
  bool contains_standard = false;
  std::size_t count = 0;
};

// All F_q-rational k-planes contained in the sample's variety. The sample
// must have been drawn at p = q.
FanoResult fano_points(const CISample& sample, std::uint64_t q,
                       const EnumerationCaps& caps = {});

}  // namespace fanotk

#endif
