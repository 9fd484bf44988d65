#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fanotk/ff.hpp"
#include "fanotk/integers.hpp"
#include "fanotk/rng.hpp"

using namespace fanotk;

namespace {

// Oracle for subspace counts, independent of the product formula: enumerate
// every r x n matrix over F_q and count the distinct row spaces of full rank,
// a row space being represented by the sorted set of all its q^r vectors.
std::size_t count_subspaces_bruteforce(int n, int r, std::uint64_t q) {
  std::size_t total_matrices = 1;
  for (int i = 0; i < n * r; ++i) total_matrices *= q;
  std::size_t span_size_full = 1;
  for (int i = 0; i < r; ++i) span_size_full *= q;

  std::set<std::vector<std::vector<std::uint64_t>>> spans;
  for (std::size_t code = 0; code < total_matrices; ++code) {
    std::size_t rest = code;
    std::vector<std::vector<std::uint64_t>> rows(
        r, std::vector<std::uint64_t>(n));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) {
        rows[i][j] = rest % q;
        rest /= q;
      }
    std::set<std::vector<std::uint64_t>> span;
    for (std::size_t combo = 0; combo < span_size_full; ++combo) {
      std::size_t cr = combo;
      std::vector<std::uint64_t> v(n, 0);
      for (int i = 0; i < r; ++i) {
        std::uint64_t coeff = cr % q;
        cr /= q;
        for (int j = 0; j < n; ++j) v[j] = (v[j] + coeff * rows[i][j]) % q;
      }
      span.insert(std::move(v));
    }
    if (span.size() == span_size_full)  // q^r distinct vectors == full rank
      spans.insert(
          std::vector<std::vector<std::uint64_t>>(span.begin(), span.end()));
  }
  return spans.size();
}

}  // namespace

TEST_CASE("prime field basic arithmetic") {
  PrimeField f7(7);
  CHECK(f7.inv(2) == 4);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.add(5, 4) == 2);
  CHECK(f7.neg(3) == 4);
  CHECK(f7.neg(0) == 0);
  CHECK_THROWS_AS(f7.inv(0), MathError);
}

TEST_CASE("non-prime modulus is rejected") {
  CHECK_THROWS_AS(PrimeField(6), ParamError);
  CHECK_THROWS_AS(PrimeField(1), ParamError);
  CHECK_THROWS_AS(PrimeField(0), ParamError);
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(1009));
  CHECK_NOTHROW(PrimeField(1000000007));
}

TEST_CASE("is_prime_u64 on known values") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(1009));
  CHECK(is_prime_u64(2147483647ull));          // 2^31 - 1
  CHECK(is_prime_u64(2305843009213693951ull)); // 2^61 - 1
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(1007));  // 19 * 53
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
}

TEST_CASE("field axioms hold on random samples") {
  for (std::uint64_t p : {5ull, 7ull, 1009ull, 1000003ull}) {
    PrimeField f(p);
    SplitMix64 rng{p};
    for (int trial = 0; trial < 200; ++trial) {
      std::uint64_t a = rng.next() % p, b = rng.next() % p,
                    c = rng.next() % p;
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.inv(f.inv(a)) == a);
      }
    }
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binom(7, 3) == 35);
  CHECK(binom(5, 1) == 5);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(3, 4) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK_THROWS_AS(binom(-1, 0), ParamError);
  // Values that overflow 64 bits must stay exact.
  CHECK(binom(70, 35) == Int("112186277816662845432"));
}

TEST_CASE("Pascal's rule holds exactly for n <= 40") {
  for (long long n = 1; n <= 40; ++n) {
    for (long long r = 0; r <= n; ++r) {
      CHECK(binom(n, r) == binom(n - 1, r - 1) + binom(n - 1, r));
    }
  }
}

TEST_CASE("gaussian binomial matches brute-force subspace counting") {
  CHECK(gaussian_binom(4, 2, Int(2)) == count_subspaces_bruteforce(4, 2, 2));
  CHECK(gaussian_binom(4, 2, Int(2)) == 35);
  CHECK(gaussian_binom(4, 2, Int(3)) == count_subspaces_bruteforce(4, 2, 3));
  CHECK(gaussian_binom(4, 2, Int(3)) == 130);
  CHECK(gaussian_binom(3, 1, Int(5)) == count_subspaces_bruteforce(3, 1, 5));
  CHECK(gaussian_binom(4, 3, Int(2)) == count_subspaces_bruteforce(4, 3, 2));
}

TEST_CASE("gaussian binomial edge cases and symmetry") {
  for (long long n = 0; n <= 8; ++n) {
    for (long long r = 0; r <= n; ++r) {
      for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
        CHECK(gaussian_binom(n, r, Int(q)) ==
              gaussian_binom(n, n - r, Int(q)));
      }
    }
    CHECK(gaussian_binom(n, 0, Int(3)) == 1);
  }
  CHECK(gaussian_binom(4, -1, Int(2)) == 0);
  CHECK(gaussian_binom(4, 5, Int(2)) == 0);
}

TEST_CASE("uniform field draw is unbiased-by-construction and deterministic") {
  UniformFieldDraw d1(42, 7), d2(42, 7);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t v = d1();
    CHECK(v < 7);
    CHECK(v == d2());
  }
}
