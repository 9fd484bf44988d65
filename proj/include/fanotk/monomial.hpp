#ifndef FANOTK_MONOMIAL_HPP
#define FANOTK_MONOMIAL_HPP

#include <vector>

#include "fanotk/errors.hpp"

namespace fanotk {

// Exponent vector of a monomial y_0^{e_0} ... y_{n-1}^{e_{n-1}}.
// The one monomial order used throughout the toolkit is plain lexicographic
// on exponent vectors: the first differing exponent decides.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
  static Monomial unit(int num_vars) {
    return Monomial(std::vector<int>(num_vars, 0));
  }

  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }

  int num_vars() const { return static_cast<int>(e.size()); }

  bool operator==(const Monomial& o) const { return e == o.e; }
};

// True when a > b in lex order. Vectors must have equal length.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  }
  return false;
}

inline bool lex_less(const Monomial& a, const Monomial& b) {
  return lex_greater(b, a);
}

// Map comparator putting the lex-greatest monomial first.
struct LexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_greater(a, b);
  }
};

// All monomials of the given degree in num_vars variables, strictly
// descending in lex order (so y_0^d comes first).
std::vector<Monomial> monomials_lex(int num_vars, int degree);

}  // namespace fanotk

#endif
