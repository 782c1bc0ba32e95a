#include "unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lazcad {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::linear(const Rational& a0, const Rational& a1) {
  return UniPoly(std::vector<Rational>{a0, a1});
}

const Rational& UniPoly::coeff(int k) const {
  static const Rational z(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return z;
  return c_[static_cast<std::size_t>(k)];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x = -x;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& s) const {
  if (s == 0) return UniPoly();
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= s;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(r));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + UniPoly::constant(c_[i]);
  return acc;
}

UniPoly UniPoly::shift_scale(const Rational& a, const Rational& b) const {
  return compose(UniPoly::linear(a, b));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / lc());
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    Rational c = c_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0 || c != 1) os << c;
    if (i > 0) {
      if (c != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("univariate division by zero");
  std::vector<Rational> r = f.coeffs();
  int dg = g.degree();
  if (f.degree() < dg) return {UniPoly(), f};
  std::vector<Rational> q(static_cast<std::size_t>(f.degree() - dg) + 1, Rational(0));
  for (int k = f.degree(); k >= dg; --k) {
    Rational c = r[static_cast<std::size_t>(k)] / g.lc();
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - dg)] = c;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(k - dg + j)] -= c * g.coeff(j);
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = y;
    y = r;
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 1) return p.monic();
  UniPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.monic();
  return divmod(p, g).first.monic();
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeff(i) / p.lc()));
  return m + 1;
}

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  seq.push_back(p);
  seq.push_back(p.derivative());
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_variations_at(const std::vector<UniPoly>& seq, const Rational& x) {
  int vars = 0, prev = 0;
  for (const auto& s : seq) {
    int sg = sign(s.eval(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++vars;
    prev = sg;
  }
  return vars;
}

int sign_variations_at_inf(const std::vector<UniPoly>& seq, int dir) {
  int vars = 0, prev = 0;
  for (const auto& s : seq) {
    if (s.is_zero()) continue;
    int sg = sign(s.lc());
    if (dir < 0 && s.degree() % 2 == 1) sg = -sg;
    if (prev != 0 && sg != prev) ++vars;
    prev = sg;
  }
  return vars;
}

}  // namespace

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("sturm count of zero polynomial");
  UniPoly sf = squarefree_part(p);
  if (sf.degree() == 0) return 0;
  auto seq = sturm_sequence(sf);
  return sign_variations_at(seq, lo) - sign_variations_at(seq, hi);
}

int sturm_count_all(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("sturm count of zero polynomial");
  UniPoly sf = squarefree_part(p);
  if (sf.degree() == 0) return 0;
  auto seq = sturm_sequence(sf);
  return sign_variations_at_inf(seq, -1) - sign_variations_at_inf(seq, +1);
}

namespace {

// Sign variations of p mapped from the interval (lo, hi) onto (0, inf):
// bound for the number of roots in the open interval (Descartes).
int interval_variations(const UniPoly& p, const Rational& lo, const Rational& hi) {
  // q(x) = p(lo + (hi-lo) x) maps (0,1); then Moebius x -> 1/(1+x) onto (0,inf):
  // count variations of (1+x)^d q(1/(1+x))
  UniPoly q = p.shift_scale(lo, hi - lo);
  int d = q.degree();
  // reverse coefficients, then Taylor shift by 1
  std::vector<Rational> rev(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) rev[static_cast<std::size_t>(d - i)] = q.coeff(i);
  UniPoly r = UniPoly(std::move(rev)).shift_scale(Rational(1), Rational(1));
  int vars = 0, prev = 0;
  for (int i = 0; i <= r.degree(); ++i) {
    int sg = sign(r.coeff(i));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++vars;
    prev = sg;
  }
  return vars;
}

void isolate_rec(const UniPoly& p, const Rational& lo, const Rational& hi,
                 std::vector<IsolatingInterval>& out) {
  int v = interval_variations(p, lo, hi);
  if (v == 0) return;
  if (v == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  isolate_rec(p, lo, mid, out);
  if (p.eval(mid) == 0) out.push_back({mid, mid});
  isolate_rec(p, mid, hi, out);
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  std::vector<IsolatingInterval> out;
  UniPoly sf = squarefree_part(p);
  if (sf.degree() <= 0) return out;
  Rational b = root_bound(sf);
  isolate_rec(sf, -b, b, out);
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b2) { return a.lo < b2.lo; });
  return out;
}

}  // namespace lazcad
