#ifndef LAZCAD_VALUATION_HPP
#define LAZCAD_VALUATION_HPP

#include "realalg.hpp"

namespace lazcad {

/// Vector of naturals under lexicographic comparison.
struct Valuation {
  std::vector<unsigned> entries;

  bool is_zero() const {
    for (auto e : entries)
      if (e) return false;
    return true;
  }
  std::string to_string() const;
};

/// First differing entry decides; lengths must match.
int lex_compare(const Valuation& a, const Valuation& b);
Valuation operator+(const Valuation& a, const Valuation& b);
inline bool operator==(const Valuation& a, const Valuation& b) { return a.entries == b.entries; }

struct ResidueResult {
  /// The Lazard residue: polynomial over the view's extended order in the
  /// remaining free variables (and possibly the generator slot).
  Polynomial residue;
  /// nu_1..nu_upto
  Valuation semivaluation;
};

/// Algorithm "Lazard residue": for i = 1..upto, divide f by the largest
/// power of (x_i - beta_i) and substitute beta_i. Throws on the zero
/// polynomial.
ResidueResult lazard_residue_over(const Polynomial& f, const PointView& view, int upto);

/// Residue above a point in R^(n-1): upto = s.level().
ResidueResult lazard_residue(const Polynomial& f, const SamplePoint& s, const VarOrderPtr& ord);

/// Lex-least valuation of f at a full point (all coordinates processed).
Valuation valuation_at(const Polynomial& f, const SamplePoint& s, const VarOrderPtr& ord);

/// Real roots of the Lazard residue of f over s in the main variable, with
/// multiplicities; empty when the residue is a nonzero constant.
std::vector<std::pair<AlgebraicNumber, unsigned>> roots_over_sample(const Polynomial& f,
                                                                    const SamplePoint& s,
                                                                    const VarOrderPtr& ord,
                                                                    int main_var);

}  // namespace lazcad

#endif
