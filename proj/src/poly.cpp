#include "poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lazcad {

Rational pow(const Rational& base, unsigned exp) {
  Rational r(1);
  Rational b = base;
  unsigned e = exp;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& m) const {
  Monomial q{e};
  for (std::size_t i = 0; i < e.size(); ++i) q.e[i] -= m.e[i];
  return q;
}

Monomial Monomial::times(const Monomial& m) const {
  Monomial q{e};
  for (std::size_t i = 0; i < e.size(); ++i) q.e[i] += m.e[i];
  return q;
}

bool Monomial::is_one() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

int monomial_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  }
  return 0;
}

Polynomial Polynomial::zero(VarOrderPtr ord) {
  Polynomial p;
  p.order_ = std::move(ord);
  return p;
}

Polynomial Polynomial::constant(VarOrderPtr ord, const Rational& c) {
  Polynomial p;
  p.order_ = std::move(ord);
  if (c != 0) p.terms_.push_back({Monomial{std::vector<uint32_t>(p.order_->size(), 0u)}, c});
  return p;
}

Polynomial Polynomial::variable(VarOrderPtr ord, int pos) {
  Polynomial p;
  p.order_ = std::move(ord);
  if (pos < 0 || pos >= p.order_->size()) throw std::invalid_argument("variable position out of range");
  Monomial m{std::vector<uint32_t>(p.order_->size(), 0u)};
  m.e[pos] = 1;
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(VarOrderPtr ord, std::vector<Term> terms) {
  Polynomial p;
  p.order_ = std::move(ord);
  for (const auto& t : terms)
    if (static_cast<int>(t.mono.e.size()) != p.order_->size())
      throw std::invalid_argument("exponent vector length mismatch");
  p.compress(std::move(terms));
  return p;
}

void Polynomial::compress(std::vector<Term>&& raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& a, const Term& b) { return monomial_cmp(a.mono, b.mono) > 0; });
  terms_.clear();
  for (auto& t : raw) {
    if (!terms_.empty() && terms_.back().mono == t.mono)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
    if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
  }
  // a cancellation can leave interior zeros; sweep once more
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("not a constant polynomial");
  return terms_[0].coeff;
}

int Polynomial::degree(int pos) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.e[pos]));
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

int Polynomial::max_var() const {
  int m = -1;
  for (const auto& t : terms_)
    for (int i = static_cast<int>(t.mono.e.size()) - 1; i > m; --i)
      if (t.mono.e[i]) {
        m = i;
        break;
      }
  return m;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.order_ = order_;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = monomial_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0)
      r.terms_.push_back(terms_[i++]);
    else if (c < 0)
      r.terms_.push_back(o.terms_[j++]);
    else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  r.order_ = order_;
  if (is_zero() || o.is_zero()) return r;
  std::map<std::vector<uint32_t>, Rational> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      auto m = a.mono.times(b.mono);
      acc[std::move(m.e)] += a.coeff * b.coeff;
    }
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.push_back({Monomial{e}, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return monomial_cmp(a.mono, b.mono) > 0; });
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return zero(order_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(order_, 1);
  Polynomial b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    if (k >>= 1u) b = b * b;
  }
  return r;
}

Polynomial Polynomial::coeff_wrt(int pos, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.e[pos] == k) {
      Term c = t;
      c.mono.e[pos] = 0;
      out.push_back(std::move(c));
    }
  return from_terms(order_, std::move(out));
}

std::vector<Polynomial> Polynomial::coeffs_wrt(int pos) const {
  if (is_zero()) return {};
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree(pos)) + 1);
  for (const auto& t : terms_) {
    Term c = t;
    unsigned d = c.mono.e[pos];
    c.mono.e[pos] = 0;
    buckets[d].push_back(std::move(c));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(order_, std::move(b)));
  return out;
}

Polynomial Polynomial::leading_coeff(int pos) const {
  if (is_zero()) return zero(order_);
  return coeff_wrt(pos, static_cast<unsigned>(degree(pos)));
}

Polynomial Polynomial::derivative(int pos) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.e[pos] > 0) {
      Term d = t;
      d.coeff *= Rational(d.mono.e[pos]);
      d.mono.e[pos] -= 1;
      out.push_back(std::move(d));
    }
  return from_terms(order_, std::move(out));
}

Polynomial Polynomial::substitute(int pos, const Rational& value) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Term s = t;
    if (unsigned d = s.mono.e[pos]; d > 0) {
      s.coeff *= lazcad::pow(value, d);
      s.mono.e[pos] = 0;
    }
    if (s.coeff != 0) out.push_back(std::move(s));
  }
  return from_terms(order_, std::move(out));
}

Polynomial Polynomial::substitute(int pos, const Polynomial& value) const {
  // Horner in x_pos
  auto cs = coeffs_wrt(pos);
  if (cs.empty()) return zero(order_);
  Polynomial acc = cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) acc = acc * value + cs[i];
  return acc;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars()) throw std::invalid_argument("point dimension mismatch");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono.e[i]) v *= lazcad::pow(point[i], t.mono.e[i]);
    sum += v;
  }
  return sum;
}

Rational Polynomial::rational_content() const {
  if (is_zero()) return Rational(0);
  Integer g(0), l(1);
  for (const auto& t : terms_) {
    g = lazcad::gcd(g, num(t.coeff));
    l = lazcad::lcm(l, den(t.coeff));
  }
  Rational c(g, l);
  if (terms_[0].coeff < 0) c = -c;
  return c;
}

Polynomial Polynomial::normalized() const {
  if (is_zero()) return *this;
  Rational c = rational_content();
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff /= c;
  return r;
}

Polynomial Polynomial::embedded(VarOrderPtr target, const std::vector<int>& pos_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m{std::vector<uint32_t>(target->size(), 0u)};
    for (std::size_t i = 0; i < t.mono.e.size(); ++i)
      if (t.mono.e[i]) m.e.at(pos_map[i]) = t.mono.e[i];
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(std::move(target), std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool printed = false;
    if (c != 1 || t.mono.is_one()) {
      os << c;
      printed = true;
    }
    for (std::size_t i = 0; i < t.mono.e.size(); ++i)
      if (t.mono.e[i]) {
        if (printed) os << "*";
        os << order_->name(static_cast<int>(i));
        if (t.mono.e[i] > 1) os << "^" << t.mono.e[i];
        printed = true;
      }
  }
  return os.str();
}

int poly_cmp(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    int c = monomial_cmp(ta[i].mono, tb[i].mono);
    if (c) return c;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  return Rational(lazcad::gcd(num(a), num(b)), lazcad::lcm(den(a), den(b)));
}

Polynomial pseudo_rem(const Polynomial& f, const Polynomial& g, int v) {
  if (g.is_zero()) throw std::domain_error("pseudo_rem by zero");
  int dg = g.degree(v);
  Polynomial lcg = g.leading_coeff(v);
  Polynomial r = f;
  Polynomial xv = Polynomial::variable(f.order(), v);
  int dr = r.degree(v);
  while (!r.is_zero() && (dr = r.degree(v)) >= dg) {
    Polynomial lcr = r.leading_coeff(v);
    // r <- lcg * r - lcr * x^(dr-dg) * g
    r = r * lcg - g * lcr * xv.pow(static_cast<unsigned>(dr - dg));
    if (!r.is_zero() && r.degree(v) == dr) throw std::logic_error("pseudo_rem failed to reduce degree");
  }
  return r;
}

namespace {

// GCD of integer-primitive polynomials, returned integer-primitive with
// positive leading coefficient.
Polynomial gcd_primitive(Polynomial a, Polynomial b);

Polynomial content_wrt_impl(const Polynomial& p, int v) {
  Polynomial c = Polynomial::zero(p.order());
  for (const auto& q : p.coeffs_wrt(v))
    if (!q.is_zero()) c = gcd(c, q);
  return c;
}

Polynomial gcd_primitive(Polynomial a, Polynomial b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant())
    return Polynomial::constant(a.order(), rational_gcd(a.rational_content(), b.rational_content()));
  int v = std::max(a.max_var(), b.max_var());
  if (a.degree(v) == 0) return gcd(a, content_wrt_impl(b, v));
  if (b.degree(v) == 0) return gcd(b, content_wrt_impl(a, v));
  Polynomial ca = content_wrt_impl(a, v);
  Polynomial cb = content_wrt_impl(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial A = divexact(a, ca).normalized();
  Polynomial B = divexact(b, cb).normalized();
  if (A.degree(v) < B.degree(v)) std::swap(A, B);
  // primitive PRS
  while (true) {
    Polynomial r = pseudo_rem(A, B, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      B = Polynomial::constant(a.order(), 1);
      break;
    }
    A = B;
    Polynomial cr = content_wrt_impl(r, v);
    B = divexact(r, cr).normalized();
  }
  return (c * B).normalized();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) {
    auto r = b.normalized();
    return r * rational_gcd(b.rational_content(), Rational(0));
  }
  if (b.is_zero()) {
    auto r = a.normalized();
    return r * rational_gcd(a.rational_content(), Rational(0));
  }
  Rational ra = a.rational_content();
  Rational rb = b.rational_content();
  Polynomial g = gcd_primitive(a.normalized(), b.normalized());
  return g * rational_gcd(ra, rb);
}

Polynomial divexact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (f.is_zero()) return f;
  if (g.is_constant()) return f * (Rational(1) / g.constant_value());
  Polynomial r = f;
  std::vector<Polynomial::Term> q;
  const auto& gl = g.terms().front();
  while (!r.is_zero()) {
    const auto& rl = r.terms().front();
    if (!gl.mono.divides(rl.mono)) throw std::domain_error("not an exact polynomial division");
    Polynomial::Term t{rl.mono.quotient(gl.mono), rl.coeff / gl.coeff};
    r = r - g * Polynomial::from_terms(f.order(), {t});
    q.push_back(std::move(t));
  }
  return Polynomial::from_terms(f.order(), std::move(q));
}

std::pair<Polynomial, Polynomial> content_and_primitive(const Polynomial& p, int v) {
  if (p.is_zero()) throw std::domain_error("content of zero polynomial");
  Polynomial c = content_wrt_impl(p, v);
  return {c, divexact(p, c)};
}

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p, int v) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<Polynomial, unsigned>> out;
  if (p.degree(v) == 0) return out;
  // Yun's algorithm over Q[lower vars][v]
  Polynomial f = p;
  Polynomial fp = f.derivative(v);
  Polynomial u = gcd(f, fp);
  Polynomial w = divexact(f, u);
  Polynomial y = divexact(fp, u);
  unsigned i = 1;
  while (true) {
    Polynomial z = y - w.derivative(v);
    if (z.is_zero()) {
      if (w.degree(v) > 0 || !w.is_constant()) out.push_back({w.normalized(), i});
      break;
    }
    Polynomial g = gcd(w, z);
    if (!g.is_constant()) out.push_back({g.normalized(), i});
    w = divexact(w, g);
    y = divexact(z, g);
    ++i;
  }
  std::erase_if(out, [](const auto& pr) { return pr.first.is_constant(); });
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) return p.normalized();
  Polynomial r = Polynomial::constant(p.order(), 1);
  // peel factors variable by variable: split off the content recursively and
  // run Yun on the primitive part in the top variable
  Polynomial q = p.normalized();
  int v = q.max_var();
  auto [c, pp] = content_and_primitive(q, v);
  for (const auto& [fac, mult] : squarefree_decomposition(pp, v)) r = r * fac;
  if (!c.is_constant()) r = r * squarefree_part(c);
  return r.normalized();
}

void PolySet::insert(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) return;
  if (!order_) order_ = p.order();
  Polynomial n = p.normalized();
  auto it = std::lower_bound(elems_.begin(), elems_.end(), n,
                             [](const Polynomial& a, const Polynomial& b) { return poly_cmp(a, b) < 0; });
  if (it != elems_.end() && poly_cmp(*it, n) == 0) return;
  elems_.insert(it, std::move(n));
}

void PolySet::insert_all(const PolySet& s) {
  for (const auto& p : s) insert(p);
}

bool PolySet::contains(const Polynomial& p) const {
  Polynomial n = p.normalized();
  auto it = std::lower_bound(elems_.begin(), elems_.end(), n,
                             [](const Polynomial& a, const Polynomial& b) { return poly_cmp(a, b) < 0; });
  return it != elems_.end() && poly_cmp(*it, n) == 0;
}

bool PolySet::contains_all(const PolySet& s) const {
  for (const auto& p : s)
    if (!contains(p)) return false;
  return true;
}

bool PolySet::operator==(const PolySet& o) const {
  if (elems_.size() != o.elems_.size()) return false;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (poly_cmp(elems_[i], o.elems_[i]) != 0) return false;
  return true;
}

namespace {

// Splits p into totally squarefree primitive factors (contents recursed).
void collect_squarefree_factors(const Polynomial& p, std::vector<Polynomial>& out) {
  if (p.is_zero() || p.is_constant()) return;
  Polynomial q = p.normalized();
  int v = q.max_var();
  auto [c, pp] = content_and_primitive(q, v);
  for (const auto& [fac, mult] : squarefree_decomposition(pp, v)) out.push_back(fac);
  collect_squarefree_factors(c, out);
}

}  // namespace

PolySet squarefree_basis(const PolySet& a, bool finest) {
  std::vector<Polynomial> work;
  for (const auto& p : a) collect_squarefree_factors(p, work);
  if (finest) {
    // refine by pairwise GCDs until coprime
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < work.size() && !changed; ++i)
        for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
          if (work[i] == work[j]) {
            work.erase(work.begin() + static_cast<long>(j));
            changed = true;
            break;
          }
          Polynomial g = gcd(work[i], work[j]);
          if (!g.is_constant()) {
            Polynomial qi = divexact(work[i], g).normalized();
            Polynomial qj = divexact(work[j], g).normalized();
            work.erase(work.begin() + static_cast<long>(j));
            work.erase(work.begin() + static_cast<long>(i));
            work.push_back(g.normalized());
            if (!qi.is_constant()) work.push_back(qi);
            if (!qj.is_constant()) work.push_back(qj);
            changed = true;
          }
        }
    }
  }
  PolySet b;
  for (const auto& p : work) b.insert(p);
  return b;
}

}  // namespace lazcad
