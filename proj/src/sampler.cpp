#include "fanotk/sampler.hpp"

namespace fanotk {

std::vector<CoeffKey> coefficient_keys(const Parameters& params) {
  std::vector<CoeffKey> keys;
  for (int i = 1; i <= params.s(); ++i) {
    auto mus = monomials_lex(params.k + 1, params.d[i - 1] - 1);
    for (int h = params.k + 1; h <= params.m; ++h) {
      for (const auto& mu : mus) keys.push_back({i, h, mu});
    }
  }
  return keys;
}

HomogPoly linear_part(const CoeffTable& c, int i, int h,
                      const Parameters& params, const PrimeField& f) {
  HomogPoly p(params.k + 1, params.d[i - 1] - 1);
  for (const auto& mu : monomials_lex(params.k + 1, params.d[i - 1] - 1)) {
    auto it = c.find({i, h, mu});
    if (it == c.end())
      throw ParamError("linear_part: missing coefficient index");
    p.add_term(mu, it->second, f);
  }
  return p;
}

std::vector<HomogPoly> assemble_g(const CoeffTable& c,
                                  const std::vector<HomogPoly>& r,
                                  const Parameters& params,
                                  const PrimeField& f) {
  const int m = params.m, k = params.k, s = params.s();
  if (static_cast<int>(r.size()) != s)
    throw ParamError("assemble_g: need one residual polynomial per equation");

  // The table must be exactly the canonical index set.
  auto keys = coefficient_keys(params);
  if (c.size() != keys.size())
    throw ParamError("assemble_g: coefficient table has wrong size");
  for (const auto& key : keys) {
    if (c.find(key) == c.end())
      throw ParamError("assemble_g: missing coefficient index");
  }

  std::vector<HomogPoly> g;
  for (int i = 1; i <= s; ++i) {
    const int di = params.d[i - 1];
    HomogPoly gi(m + 1, di);
    for (int h = k + 1; h <= m; ++h) {
      for (const auto& mu : monomials_lex(k + 1, di - 1)) {
        std::uint64_t v = c.at({i, h, mu});
        if (v == 0) continue;
        // y_h * y^mu embedded in the m+1 ambient variables.
        Monomial mm = Monomial::unit(m + 1);
        for (int j = 0; j <= k; ++j) mm.e[j] = mu.e[j];
        mm.e[h] += 1;
        gi.add_term(mm, v, f);
      }
    }
    const HomogPoly& ri = r[i - 1];
    if (ri.num_vars() != m + 1 || (!ri.is_zero() && ri.degree() != di))
      throw ParamError("assemble_g: residual polynomial shape mismatch");
    for (const auto& [mon, v] : ri.terms()) {
      int tail = 0;
      for (int j = k + 1; j <= m; ++j) tail += mon.e[j];
      if (tail < 2)
        throw ParamError(
            "assemble_g: residual term outside the squared plane ideal");
      gi.add_term(mon, v, f);
    }
    g.push_back(std::move(gi));
  }
  return g;
}

namespace detail {

bool draw_sample_attempt(const Parameters& params, const PrimeField& f,
                         const std::function<std::uint64_t()>& next_element,
                         CoeffTable& c, std::vector<HomogPoly>& r,
                         std::vector<HomogPoly>& g) {
  c.clear();
  r.clear();
  g.clear();
  for (const auto& key : coefficient_keys(params))
    c.emplace(key, next_element());
  for (int i = 1; i <= params.s(); ++i) {
    const int di = params.d[i - 1];
    HomogPoly ri(params.m + 1, di);
    for (const auto& mon :
         ideal_plane_bases(di, params.m, params.k).ideal_sq)
      ri.add_term(mon, next_element(), f);
    r.push_back(std::move(ri));
  }
  g = assemble_g(c, r, params, f);
  for (const auto& gi : g)
    if (gi.is_zero()) return false;
  return true;
}

}  // namespace detail

CISample sample_ci(const Parameters& params, std::uint64_t p,
                   std::uint64_t seed) {
  params.validate();
  PrimeField f(p);
  CISample sample;
  sample.params = params;
  sample.p = p;
  sample.seed = seed;
  for (std::uint64_t attempt = 0;; ++attempt) {
    UniformFieldDraw draw(attempt_stream_seed(seed, attempt), p);
    if (detail::draw_sample_attempt(params, f, [&] { return draw(); },
                                    sample.c, sample.r, sample.g))
      break;
  }
  return sample;
}

}  // namespace fanotk
