#include "fanotk/poly.hpp"

#include <algorithm>

namespace fanotk {

HomogPoly HomogPoly::variable(int num_vars, int j) {
  if (j < 0 || j >= num_vars) throw ParamError("variable index out of range");
  Monomial m = Monomial::unit(num_vars);
  m.e[j] = 1;
  HomogPoly p(num_vars, 1);
  p.terms_[m] = 1;
  return p;
}

HomogPoly HomogPoly::from_term(int num_vars, const Monomial& m,
                               std::uint64_t coeff) {
  if (m.num_vars() != num_vars)
    throw ParamError("from_term: monomial arity mismatch");
  HomogPoly p(num_vars, m.degree());
  if (coeff != 0) p.terms_[m] = coeff;
  return p;
}

HomogPoly HomogPoly::from_terms(
    int num_vars, int degree,
    const std::vector<std::pair<Monomial, std::uint64_t>>& terms) {
  HomogPoly p(num_vars, degree);
  for (const auto& [m, c] : terms) {
    if (m.num_vars() != num_vars || m.degree() != degree)
      throw ParamError("from_terms: monomial shape mismatch");
    if (c == 0) continue;
    auto [it, inserted] = p.terms_.emplace(m, c);
    if (!inserted) throw ParamError("from_terms: duplicate monomial");
  }
  return p;
}

void HomogPoly::add_term(const Monomial& m, std::uint64_t c,
                         const PrimeField& f) {
  if (m.num_vars() != nvars_) throw ParamError("add_term: arity mismatch");
  if (m.degree() != deg_) throw ParamError("add_term: degree mismatch");
  c = f.reduce(c);
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
    return;
  }
  it->second = f.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

HomogPoly HomogPoly::add(const HomogPoly& o, const PrimeField& f) const {
  if (nvars_ != o.nvars_ || deg_ != o.deg_)
    throw ParamError("add: incompatible polynomials");
  HomogPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c, f);
  return out;
}

HomogPoly HomogPoly::scale(std::uint64_t c, const PrimeField& f) const {
  HomogPoly out(nvars_, deg_);
  c = f.reduce(c);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_[m] = f.mul(v, c);
  return out;
}

HomogPoly HomogPoly::mul(const HomogPoly& o, const PrimeField& f) const {
  if (nvars_ != o.nvars_) throw ParamError("mul: arity mismatch");
  HomogPoly out(nvars_, deg_ + o.deg_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (int i = 0; i < nvars_; ++i) m.e[i] += mb.e[i];
      out.add_term(m, f.mul(ca, cb), f);
    }
  }
  return out;
}

std::uint64_t HomogPoly::evaluate(const std::vector<std::uint64_t>& point,
                                  const PrimeField& f) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw ParamError("evaluate: point arity mismatch");
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t v = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int t = 0; t < m.e[i]; ++t) v = f.mul(v, point[i]);
    }
    acc = f.add(acc, v);
  }
  return acc;
}

std::string HomogPoly::render(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string factors;
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += var_prefix + std::to_string(i);
      if (m.e[i] > 1) factors += "^" + std::to_string(m.e[i]);
    }
    if (factors.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += factors;
    } else {
      out += std::to_string(c) + "*" + factors;
    }
  }
  return out;
}

HomogPoly substitute_linear(const HomogPoly& g, const FpMat& B,
                            const PrimeField& f) {
  if (B.cols != static_cast<std::size_t>(g.num_vars()))
    throw ParamError("substitute_linear: B column count must match arity");
  if (rank_mod_p(B, f) != B.rows)
    throw ParamError("substitute_linear: matrix does not have full row rank");
  int out_vars = static_cast<int>(B.rows);

  // Linear image of each input variable.
  std::vector<HomogPoly> lin;
  lin.reserve(B.cols);
  for (std::size_t r = 0; r < B.cols; ++r) {
    HomogPoly L(out_vars, 1);
    for (std::size_t j = 0; j < B.rows; ++j) {
      Monomial m = Monomial::unit(out_vars);
      m.e[j] = 1;
      L.add_term(m, B.at(j, r), f);
    }
    lin.push_back(std::move(L));
  }

  HomogPoly result(out_vars, g.degree());
  HomogPoly unit = HomogPoly::from_term(out_vars, Monomial::unit(out_vars), 1);
  for (const auto& [m, c] : g.terms()) {
    HomogPoly prod = unit.scale(c, f);
    for (int i = 0; i < g.num_vars(); ++i) {
      for (int t = 0; t < m.e[i]; ++t) {
        prod = prod.mul(lin[i], f);
        if (prod.is_zero()) break;
      }
      if (prod.is_zero()) break;
    }
    if (!prod.is_zero()) result = result.add(prod, f);
  }
  return result;
}

HomogPoly partial_derivative(const HomogPoly& g, int j, const PrimeField& f) {
  if (j < 0 || j >= g.num_vars())
    throw ParamError("partial_derivative: variable index out of range");
  HomogPoly out(g.num_vars(), g.degree() > 0 ? g.degree() - 1 : 0);
  for (const auto& [m, c] : g.terms()) {
    if (m.e[j] == 0) continue;
    std::uint64_t factor = f.reduce(static_cast<std::uint64_t>(m.e[j]));
    if (factor == 0) continue;  // characteristic-p drop
    Monomial d = m;
    d.e[j] -= 1;
    out.add_term(d, f.mul(c, factor), f);
  }
  return out;
}

HomogPoly restrict_to_standard_plane(const HomogPoly& g, int k) {
  if (k < 0 || k >= g.num_vars())
    throw ParamError("restrict_to_standard_plane: k out of range");
  // Restriction is injective on the surviving monomials, so coefficients
  // carry over untouched.
  std::vector<std::pair<Monomial, std::uint64_t>> kept;
  for (const auto& [m, c] : g.terms()) {
    bool survives = true;
    for (int i = k + 1; i < g.num_vars(); ++i) {
      if (m.e[i] != 0) {
        survives = false;
        break;
      }
    }
    if (!survives) continue;
    kept.emplace_back(Monomial(std::vector<int>(m.e.begin(),
                                                m.e.begin() + k + 1)),
                      c);
  }
  return HomogPoly::from_terms(k + 1, g.degree(), kept);
}

PlaneIdealBases ideal_plane_bases(int d, int m, int k) {
  if (d < 1) throw ParamError("ideal_plane_bases: degree must be positive");
  if (k < 0 || k >= m) throw ParamError("ideal_plane_bases: need 0 <= k < m");
  PlaneIdealBases out;
  for (const Monomial& mon : monomials_lex(m + 1, d)) {
    int tail = 0;
    for (int i = k + 1; i <= m; ++i) tail += mon.e[i];
    if (tail >= 1) out.ideal.push_back(mon);
    if (tail >= 2) out.ideal_sq.push_back(mon);
  }
  return out;
}

}  // namespace fanotk
