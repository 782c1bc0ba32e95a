#ifndef LAZCAD_POLY_HPP
#define LAZCAD_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "varorder.hpp"

namespace lazcad {

/// Exponent vector; always the same length as the owning polynomial's
/// variable order. Compared lexicographically with the highest position
/// (the main variable) most significant.
struct Monomial {
  std::vector<uint32_t> e;

  unsigned total_degree() const;
  bool divides(const Monomial& m) const;
  Monomial quotient(const Monomial& m) const;  // this / m, requires m.divides(*this)
  Monomial times(const Monomial& m) const;
  bool is_one() const;
};

int monomial_cmp(const Monomial& a, const Monomial& b);
inline bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

/// Sparse multivariate polynomial with exact rational coefficients under a
/// fixed variable order. Canonical form: terms sorted descending, no zero
/// coefficients. Values are immutable after construction; all operations
/// are pure.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Polynomial() = default;
  static Polynomial zero(VarOrderPtr ord);
  static Polynomial constant(VarOrderPtr ord, const Rational& c);
  static Polynomial variable(VarOrderPtr ord, int pos);
  /// From raw term list (any order, duplicates allowed; zeros dropped).
  static Polynomial from_terms(VarOrderPtr ord, std::vector<Term> terms);

  const VarOrderPtr& order() const { return order_; }
  int nvars() const { return order_ ? order_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Requires is_constant(); zero polynomial yields 0.
  Rational constant_value() const;

  int degree(int pos) const;
  unsigned total_degree() const;
  /// Highest position with a positive exponent anywhere, -1 for constants.
  int max_var() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const;

  Polynomial pow(unsigned k) const;

  /// Coefficient of v^k, a polynomial in the remaining variables.
  Polynomial coeff_wrt(int pos, unsigned k) const;
  /// All coefficients by degree in v; size degree(v)+1; empty for zero poly.
  std::vector<Polynomial> coeffs_wrt(int pos) const;
  Polynomial leading_coeff(int pos) const;
  Polynomial trailing_coeff(int pos) const { return coeff_wrt(pos, 0); }

  Polynomial derivative(int pos) const;
  Polynomial substitute(int pos, const Rational& value) const;
  Polynomial substitute(int pos, const Polynomial& value) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  /// GCD of the rational coefficients: gcd of numerators / lcm of denominators,
  /// carrying the sign of the leading term. Zero polynomial yields 0.
  Rational rational_content() const;

  /// Canonical associate: integer coefficients with content 1 and positive
  /// leading coefficient under the term order.
  Polynomial normalized() const;

  /// Rebuilds this polynomial over a larger order; pos_map[i] is the slot in
  /// `target` for this polynomial's variable i.
  Polynomial embedded(VarOrderPtr target, const std::vector<int>& pos_map) const;

  std::string to_string() const;

 private:
  VarOrderPtr order_;
  std::vector<Term> terms_;  // sorted descending by monomial_cmp

  void compress(std::vector<Term>&& raw);
};

/// Total deterministic order on canonical polynomials over one order.
int poly_cmp(const Polynomial& a, const Polynomial& b);

Rational rational_gcd(const Rational& a, const Rational& b);

Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Divides exactly; throws std::domain_error if g does not divide f.
Polynomial divexact(const Polynomial& f, const Polynomial& g);

/// Pseudo-remainder of f by g with respect to v: lc_v(g)^(df-dg+1) f = q g + r.
Polynomial pseudo_rem(const Polynomial& f, const Polynomial& g, int v);

/// content = GCD of the coefficients of p viewed in v (with integer content),
/// primitive = p / content. Throws on the zero polynomial.
std::pair<Polynomial, Polynomial> content_and_primitive(const Polynomial& p, int v);

/// Yun decomposition of p with respect to v: list of (factor, multiplicity),
/// factors primitive in v, pairwise coprime, p = cont * prod factor^mult.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p, int v);

/// Product of the distinct non-constant factors of p, normalized.
Polynomial squarefree_part(const Polynomial& p);

/// Deduplicated set of normalized non-constant polynomials.
class PolySet {
 public:
  PolySet() = default;
  explicit PolySet(VarOrderPtr ord) : order_(std::move(ord)) {}

  void insert(const Polynomial& p);  // normalizes; ignores constants/zero
  void insert_all(const PolySet& s);
  bool contains(const Polynomial& p) const;  // compares normalized forms
  bool contains_all(const PolySet& s) const;

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  const std::vector<Polynomial>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const PolySet& o) const;

 private:
  VarOrderPtr order_;
  std::vector<Polynomial> elems_;  // sorted by poly_cmp, unique
};

/// Square-free basis of the primitive parts of the elements of A.
/// finest=true additionally splits by pairwise GCDs until coprime.
PolySet squarefree_basis(const PolySet& a, bool finest = true);

}  // namespace lazcad

#endif
