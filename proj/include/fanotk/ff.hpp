#ifndef FANOTK_FF_HPP
#define FANOTK_FF_HPP

#include <cstdint>

#include "fanotk/errors.hpp"

namespace fanotk {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Arithmetic in Z/p for a word-sized prime p.
// Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  // Throws ParamError when p is not prime or does not fit the supported range.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t reduce(std::uint64_t x) const { return x % p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  // Throws MathError for a == 0.
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

}  // namespace fanotk

#endif
