#ifndef LAZCAD_TEST_UTIL_HPP
#define LAZCAD_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "parser.hpp"
#include "poly.hpp"

namespace lazcad::test {

inline Polynomial P(const std::string& s, const VarOrderPtr& ord) {
  return parse_polynomial(s, ord);
}

/// Random integer polynomial: up to `maxterms` terms, per-variable degree
/// <= maxdeg, coefficients in [-9, 9] \ {0}. May come out zero.
inline Polynomial random_poly(std::mt19937_64& rng, const VarOrderPtr& ord, int maxdeg,
                              int maxterms) {
  std::uniform_int_distribution<int> nt(1, maxterms);
  std::uniform_int_distribution<int> dg(0, maxdeg);
  std::uniform_int_distribution<int> cf(-9, 9);
  std::vector<Polynomial::Term> terms;
  int n = nt(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m{std::vector<uint32_t>(static_cast<std::size_t>(ord->size()), 0u)};
    for (int i = 0; i < ord->size(); ++i) m.e[static_cast<std::size_t>(i)] = static_cast<uint32_t>(dg(rng));
    int c = cf(rng);
    if (c == 0) c = 1;
    terms.push_back({std::move(m), Rational(c)});
  }
  return Polynomial::from_terms(ord, std::move(terms));
}

inline Polynomial random_nonzero_poly(std::mt19937_64& rng, const VarOrderPtr& ord, int maxdeg,
                                      int maxterms) {
  for (;;) {
    Polynomial p = random_poly(rng, ord, maxdeg, maxterms);
    if (!p.is_zero()) return p;
  }
}

}  // namespace lazcad::test

#endif
