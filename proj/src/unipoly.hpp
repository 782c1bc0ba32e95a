#ifndef LAZCAD_UNIPOLY_HPP
#define LAZCAD_UNIPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace lazcad {

/// Dense univariate polynomial over Q; coefficient k multiplies x^k.
/// Normalized: no trailing zero coefficients (zero polynomial = empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly linear(const Rational& a0, const Rational& a1);  // a1*x + a0

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lc() const { return c_.back(); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  UniPoly compose(const UniPoly& inner) const;  // this(inner(x))
  UniPoly shift_scale(const Rational& a, const Rational& b) const;  // p(a + b*x)
  UniPoly monic() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Rational> c_;
  void trim();
};

/// quotient, remainder with remainder degree < divisor degree.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd, 0 if both zero
UniPoly squarefree_part(const UniPoly& p);

/// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const UniPoly& p);

/// Number of sign variations in the Sturm sequence difference: exact count
/// of distinct real roots in (lo, hi].
int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);
int sturm_count_all(const UniPoly& p);  // all real roots

struct IsolatingInterval {
  Rational lo, hi;  // lo == hi exactly for a rational root, else open (lo, hi)
};

/// Isolating intervals for all distinct real roots of p, in increasing
/// order, via Descartes' rule of signs with bisection on the square-free
/// part. Deterministic.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p);

}  // namespace lazcad

#endif
