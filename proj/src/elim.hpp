#ifndef LAZCAD_ELIM_HPP
#define LAZCAD_ELIM_HPP

#include <vector>

#include "poly.hpp"

namespace lazcad {

/// Resultant of f and g with respect to v, equal to the Sylvester-matrix
/// determinant including sign. Computed by the subresultant remainder
/// sequence. If one argument has degree 0 in v the convention
/// res = g^deg(f) (resp. f^deg(g)) applies; both degree 0 is an error.
Polynomial resultant(const Polynomial& f, const Polynomial& g, int v);

/// Sylvester-matrix determinant, evaluated by fraction-free (Bareiss)
/// elimination. Reference route for the resultant.
Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, int v);

/// (-1)^(d(d-1)/2) res_v(f, f') / lc_v(f) for d = deg_v(f) >= 2; degree 1
/// yields the constant 1; degree 0 is an error.
Polynomial discriminant(const Polynomial& f, int v);

/// Total order on monomials compatible with multiplication.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex };

  /// Lex with position 0 most significant: eliminates the early variables
  /// first ("toward" the main variable).
  static MonomialOrder lex_elim(VarOrderPtr ord);
  /// Lex with the main variable most significant: the basis triangularizes
  /// toward x_1.
  static MonomialOrder lex_main_first(VarOrderPtr ord);
  /// Graded reverse lexicographic, main variable most significant.
  static MonomialOrder grevlex(VarOrderPtr ord);

  Kind kind() const { return kind_; }
  /// Returns <0, 0, >0 as a is below, equal to, above b.
  int compare(const Monomial& a, const Monomial& b) const;

 private:
  MonomialOrder(Kind k, std::vector<int> sig) : kind_(k), significance_(std::move(sig)) {}
  Kind kind_;
  std::vector<int> significance_;  // variable positions, most significant first
};

/// Reduced Groebner basis by Buchberger's algorithm (sugar strategy, both
/// Buchberger criteria). Deterministic for a fixed order. The unit ideal
/// yields {1}.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& mo);
std::vector<Polynomial> groebner_basis(const PolySet& gens, const MonomialOrder& mo);

/// Normal form of p modulo basis under mo.
Polynomial reduce_modulo(const Polynomial& p, const std::vector<Polynomial>& basis,
                         const MonomialOrder& mo);

/// True iff for every position in `vars` the graded-order basis of `gens`
/// contains an element whose leading monomial is a pure power of that
/// variable (the unit ideal counts as zero-dimensional).
bool zero_dimensional(const std::vector<Polynomial>& gens, const std::vector<int>& vars);

}  // namespace lazcad

#endif
