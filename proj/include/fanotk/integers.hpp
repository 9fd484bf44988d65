#ifndef FANOTK_INTEGERS_HPP
#define FANOTK_INTEGERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "fanotk/errors.hpp"

namespace fanotk {

// All dimension formulas run on arbitrary-precision integers: binomials of
// the sizes that show up here overflow 64 bits quickly.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// binom(n, r) with the empty convention: 0 when r < 0 or r > n.
// n must be nonnegative.
Int binom(long long n, long long r);

// Number of r-dimensional linear subspaces of an n-dimensional vector space
// over F_q (q-binomial coefficient). 0 when r < 0 or r > n.
Int gaussian_binom(long long n, long long r, const Int& q);

}  // namespace fanotk

#endif
