#ifndef FANOTK_POLY_HPP
#define FANOTK_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fanotk/linalg.hpp"
#include "fanotk/monomial.hpp"

namespace fanotk {

// Homogeneous multivariate polynomial over a prime field, stored as a map
// from monomials to nonzero coefficients. Terms iterate in descending lex
// order, which is also the canonical text order. Zero coefficients are never
// stored, so equality is a direct map comparison.
class HomogPoly {
 public:
  using TermMap = std::map<Monomial, std::uint64_t, LexDescending>;

  HomogPoly() = default;
  HomogPoly(int num_vars, int degree) : nvars_(num_vars), deg_(degree) {}

  static HomogPoly variable(int num_vars, int j);
  static HomogPoly from_term(int num_vars, const Monomial& m,
                             std::uint64_t coeff);
  // Bulk constructor for already-reduced coefficients on distinct monomials.
  static HomogPoly from_terms(
      int num_vars, int degree,
      const std::vector<std::pair<Monomial, std::uint64_t>>& terms);

  int num_vars() const { return nvars_; }
  int degree() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  std::uint64_t coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  // Accumulates c * m; keeps the zero-free canonical form.
  void add_term(const Monomial& m, std::uint64_t c, const PrimeField& f);

  HomogPoly add(const HomogPoly& o, const PrimeField& f) const;
  HomogPoly scale(std::uint64_t c, const PrimeField& f) const;
  HomogPoly mul(const HomogPoly& o, const PrimeField& f) const;

  std::uint64_t evaluate(const std::vector<std::uint64_t>& point,
                         const PrimeField& f) const;

  // Canonical rendering, terms in descending lex order: "2*y0^3*y2 + 6*y1^4".
  std::string render(const std::string& var_prefix = "y") const;

  bool operator==(const HomogPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  int nvars_ = 0;
  int deg_ = 0;
  TermMap terms_;
};

// g composed with the linear map z -> z * B, i.e. y_r = sum_j z_j B[j][r].
// B must have one column per variable of g and full row rank; the result
// lives in B.rows variables.
HomogPoly substitute_linear(const HomogPoly& g, const FpMat& B,
                            const PrimeField& f);

// d/dy_j; coefficients reduce mod p, so y^p differentiates to zero.
HomogPoly partial_derivative(const HomogPoly& g, int j, const PrimeField& f);

// Image of g under setting y_{k+1} = ... = y_m = 0, reinterpreted in the
// k+1 plane coordinates. Drops every term with a positive exponent past k.
HomogPoly restrict_to_standard_plane(const HomogPoly& g, int k);

// Monomial bases of the degree-d pieces of the ideal (y_{k+1},...,y_m) and
// of its square, in m+1 variables, descending lex.
struct PlaneIdealBases {
  std::vector<Monomial> ideal;     // total degree >= 1 in y_{k+1..m}
  std::vector<Monomial> ideal_sq;  // total degree >= 2 in y_{k+1..m}
};
PlaneIdealBases ideal_plane_bases(int d, int m, int k);

}  // namespace fanotk

#endif
