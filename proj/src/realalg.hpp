#ifndef LAZCAD_REALALG_HPP
#define LAZCAD_REALALG_HPP

#include <memory>
#include <string>
#include <vector>

#include "poly.hpp"
#include "unipoly.hpp"

namespace lazcad {

/// A real algebraic number: square-free rational defining polynomial plus an
/// isolating interval. Rational values always carry defining = x - q with a
/// degenerate interval. Copies share the refinement state; the observable
/// value never changes, only the interval width (refinement is mutex-guarded).
class AlgebraicNumber {
 public:
  AlgebraicNumber();  // zero
  static AlgebraicNumber of_rational(const Rational& q);
  /// `sqfree` square-free with exactly one root in the interval.
  static AlgebraicNumber root_of(UniPoly sqfree, const IsolatingInterval& iv);

  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()
  const UniPoly& defining() const { return defining_; }
  std::pair<Rational, Rational> interval() const;

  void refine() const;  // halve the enclosure
  /// Refine until hi - lo < width; returns the midpoint.
  Rational approx(const Rational& width) const;
  /// Value a + b * this.
  AlgebraicNumber affine_image(const Rational& a, const Rational& b) const;

  std::string to_string() const;

 private:
  struct State;
  UniPoly defining_;
  std::shared_ptr<State> state_;
  friend int compare(const AlgebraicNumber&, const AlgebraicNumber&);
  friend int sign_of_upoly_at(const UniPoly&, const AlgebraicNumber&);
};

/// Exact total order.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
inline bool equal_values(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return compare(a, b) == 0;
}

/// Exact sign of q at the algebraic number.
int sign_of_upoly_at(const UniPoly& q, const AlgebraicNumber& a);

/// All distinct real roots of a nonzero univariate polynomial, increasing.
std::vector<AlgebraicNumber> real_roots_of(const UniPoly& f);
/// Same, for a Polynomial that is univariate in `var`.
std::vector<AlgebraicNumber> isolate_roots(const Polynomial& f, int var);

/// Strictly between a < b; prefers simple fractions of interval endpoints.
Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b);

UniPoly upoly_of(const Polynomial& p, int var);
Polynomial poly_of(const UniPoly& u, const VarOrderPtr& ord, int var);

/// A point in R^k with exact real algebraic coordinates. Internally all
/// irrational coordinates are polynomial expressions in a single generator
/// algebraic number, which keeps every exact test univariate.
class SamplePoint {
 public:
  SamplePoint();  // the empty point (level 0)
  int level() const { return static_cast<int>(coords_.size()); }
  bool all_rational() const;

  SamplePoint extended(const AlgebraicNumber& value) const;
  SamplePoint prefix(int k) const;

  AlgebraicNumber coordinate(int i) const;
  std::vector<Rational> approx(const Rational& width) const;
  std::string to_string() const;

  const AlgebraicNumber& generator() const { return gen_; }
  const UniPoly& coord_expr(int i) const { return coords_.at(static_cast<std::size_t>(i)); }

 private:
  AlgebraicNumber gen_;          // trivial (rational 0) when all coords rational
  std::vector<UniPoly> coords_;  // coordinate i = coords_[i](generator)
};

bool equal_points(const SamplePoint& a, const SamplePoint& b);

/// Exact sign of p at s; p's variables must lie within the first level(s)
/// positions of its order.
int sign_at(const Polynomial& p, const SamplePoint& s);

/// Binds a sample point into an extended variable order (problem variables
/// plus one generator slot) so that polynomial computations over the point
/// stay exact. Local defining-polynomial refinements (D5-style splits) are
/// kept inside the view.
class PointView {
 public:
  PointView(SamplePoint s, VarOrderPtr prob);

  const VarOrderPtr& ext_order() const { return ext_; }
  int gamma_pos() const { return gpos_; }
  const SamplePoint& point() const { return point_; }

  Polynomial embed(const Polynomial& p) const;  // problem order -> extended
  /// Coordinate expression c_i(gamma) as a polynomial in the extended order.
  Polynomial coord_poly(int i) const;
  /// Reduce gamma-exponents modulo the generator's defining polynomial
  /// (value-preserving).
  Polynomial reduce(const Polynomial& f) const;
  /// True iff f (free variables + gamma) vanishes identically at the point,
  /// i.e. every coefficient with respect to the free variables is zero at
  /// gamma.
  bool is_value_zero(const Polynomial& f) const;
  /// Exact sign for f involving only the gamma slot.
  int value_sign(const Polynomial& f) const;
  /// Distinct real roots (with multiplicities) of the value of f, viewed as
  /// a univariate polynomial in xvar over the point. f must involve only
  /// xvar and gamma. Increasing order.
  std::vector<std::pair<AlgebraicNumber, unsigned>> real_roots(const Polynomial& f, int xvar) const;

  UniPoly gamma_part(const Polynomial& f) const;  // f with only gamma slot -> UniPoly

 private:
  SamplePoint point_;
  VarOrderPtr prob_, ext_;
  int gpos_;
  mutable UniPoly u_;  // current (possibly split) defining factor of the generator
  bool trivial_;       // generator rational
  Rational grat_;

  bool unipoly_value_zero(const UniPoly& v) const;
  int unipoly_value_sign(const UniPoly& v) const;
};

}  // namespace lazcad

#endif
