#include "fanotk/integers.hpp"

namespace fanotk {

Int binom(long long n, long long r) {
  if (n < 0) throw ParamError("binom: n must be nonnegative");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Int result = 1;
  // Partial products are exact: result * (n-r+i) is divisible by i.
  for (long long i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

Int gaussian_binom(long long n, long long r, const Int& q) {
  if (r < 0 || r > n) return 0;
  if (q < 2) throw ParamError("gaussian_binom: q must be at least 2");
  Int num = 1, den = 1;
  for (long long i = 0; i < r; ++i) {
    num *= boost::multiprecision::pow(q, static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(q, static_cast<unsigned>(i + 1)) - 1;
  }
  Int quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw InternalError("gaussian_binom: non-exact division");
  return quot;
}

}  // namespace fanotk
