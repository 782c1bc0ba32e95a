#include "valuation.hpp"

#include <sstream>
#include <stdexcept>

namespace lazcad {

std::string Valuation::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << entries[i];
  }
  os << ")";
  return os.str();
}

int lex_compare(const Valuation& a, const Valuation& b) {
  if (a.entries.size() != b.entries.size())
    throw std::invalid_argument("lex_compare: length mismatch");
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i] != b.entries[i]) return a.entries[i] < b.entries[i] ? -1 : 1;
  return 0;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.entries.size() != b.entries.size()) throw std::invalid_argument("valuation sum: length mismatch");
  Valuation r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
  return r;
}

ResidueResult lazard_residue_over(const Polynomial& f, const PointView& view, int upto) {
  if (f.is_zero()) throw std::domain_error("lazard residue of the zero polynomial");
  if (upto > view.point().level()) throw std::invalid_argument("residue: not enough coordinates");
  Polynomial cur = view.reduce(view.embed(f));
  Valuation nu;
  for (int i = 0; i < upto; ++i) {
    Polynomial ci = view.coord_poly(i);
    unsigned v = 0;
    for (;;) {
      Polynomial sub = view.reduce(cur.substitute(i, ci));
      if (!view.is_value_zero(sub)) {
        cur = sub;
        break;
      }
      // divide by (x_i - beta_i): synthetic quotient, remainder is the
      // (value-zero) substitution just computed
      auto cs = cur.coeffs_wrt(i);
      Polynomial q = Polynomial::zero(view.ext_order());
      Polynomial carry = Polynomial::zero(view.ext_order());
      Polynomial xi = Polynomial::variable(view.ext_order(), i);
      for (std::size_t k = cs.size(); k-- > 1;) {
        carry = view.reduce(carry * ci + cs[k]);
        q = q + carry * xi.pow(static_cast<unsigned>(k - 1));
      }
      cur = view.reduce(q);
      ++v;
      if (cur.is_zero()) throw std::logic_error("residue division exhausted the polynomial");
    }
    nu.entries.push_back(v);
  }
  return {cur, std::move(nu)};
}

ResidueResult lazard_residue(const Polynomial& f, const SamplePoint& s, const VarOrderPtr& ord) {
  PointView view(s, ord);
  return lazard_residue_over(f, view, s.level());
}

Valuation valuation_at(const Polynomial& f, const SamplePoint& s, const VarOrderPtr& ord) {
  if (f.is_zero()) throw std::domain_error("valuation of the zero polynomial");
  PointView view(s, ord);
  return lazard_residue_over(f, view, s.level()).semivaluation;
}

std::vector<std::pair<AlgebraicNumber, unsigned>> roots_over_sample(const Polynomial& f,
                                                                    const SamplePoint& s,
                                                                    const VarOrderPtr& ord,
                                                                    int main_var) {
  PointView view(s, ord);
  ResidueResult r = lazard_residue_over(f, view, s.level());
  if (r.residue.degree(main_var) == 0) {
    // constant residue in the main variable; it may still involve gamma but
    // its value is a nonzero constant: no roots
    return {};
  }
  return view.real_roots(r.residue, main_var);
}

}  // namespace lazcad
