#include "fanotk/monomial.hpp"

namespace fanotk {

namespace {

void emit(std::vector<int>& cur, int pos, int remaining,
          std::vector<Monomial>& out) {
  int n = static_cast<int>(cur.size());
  if (pos == n - 1) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  // Descending lex: the leftmost exponent runs from high to low.
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    emit(cur, pos + 1, remaining - e, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_lex(int num_vars, int degree) {
  if (num_vars < 1) throw ParamError("monomials_lex: need at least 1 variable");
  if (degree < 0) throw ParamError("monomials_lex: negative degree");
  std::vector<Monomial> out;
  std::vector<int> cur(num_vars, 0);
  emit(cur, 0, degree, out);
  return out;
}

}  // namespace fanotk
