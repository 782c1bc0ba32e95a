#include "elim.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace lazcad {

namespace {

Polynomial lc_in(const Polynomial& p, int v) { return p.leading_coeff(v); }

// Pseudo-remainder with the exact lc(B)^(delta+1) scaling required by the
// subresultant sequence.
Polynomial pseudo_rem_prs(const Polynomial& f, const Polynomial& g, int v) {
  int df = f.degree(v), dg = g.degree(v);
  if (df < dg) return f;
  Polynomial lcg = g.leading_coeff(v);
  Polynomial r = f;
  Polynomial xv = Polynomial::variable(f.order(), v);
  int scaled = 0;
  while (!r.is_zero() && r.degree(v) >= dg) {
    int dr = r.degree(v);
    r = r * lcg - g * r.leading_coeff(v) * xv.pow(static_cast<unsigned>(dr - dg));
    ++scaled;
  }
  // pad to exactly delta+1 multiplications by lc(g)
  for (; scaled < df - dg + 1; ++scaled) r = r * lcg;
  return r;
}

}  // namespace

Polynomial resultant(const Polynomial& f, const Polynomial& g, int v) {
  const VarOrderPtr& ord = f.order();
  if (f.is_zero() || g.is_zero()) return Polynomial::zero(ord);
  int a = f.degree(v);
  int b = g.degree(v);
  if (a == 0 && b == 0) throw std::domain_error("resultant: both arguments constant in the variable");
  if (a == 0) return f.pow(static_cast<unsigned>(b));
  if (b == 0) return g.pow(static_cast<unsigned>(a));

  Polynomial A = f, B = g;
  int s = 1;
  if (a < b) {
    std::swap(A, B);
    std::swap(a, b);
    if ((a & 1) && (b & 1)) s = -s;
  }
  // pull out contents in v (Cohen, Alg. 3.3.7)
  auto [ca, pa] = content_and_primitive(A, v);
  auto [cb, pb] = content_and_primitive(B, v);
  A = pa;
  B = pb;
  Polynomial t = ca.pow(static_cast<unsigned>(B.degree(v))) * cb.pow(static_cast<unsigned>(A.degree(v)));
  Polynomial gg = Polynomial::constant(ord, 1);
  Polynomial hh = Polynomial::constant(ord, 1);
  while (true) {
    int da = A.degree(v), db = B.degree(v);
    int delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    Polynomial R = pseudo_rem_prs(A, B, v);
    A = B;
    Polynomial denom = gg * hh.pow(static_cast<unsigned>(delta));
    B = divexact(R, denom);
    gg = lc_in(A, v);
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      hh = gg;
    } else {
      hh = divexact(gg.pow(static_cast<unsigned>(delta)), hh.pow(static_cast<unsigned>(delta - 1)));
    }
    if (B.is_zero()) return Polynomial::zero(ord);
    if (B.degree(v) == 0) break;
  }
  int da = A.degree(v);
  Polynomial res;
  if (da == 1) {
    res = B;
  } else {
    res = divexact(B.pow(static_cast<unsigned>(da)), hh.pow(static_cast<unsigned>(da - 1)));
  }
  res = res * t;
  return s < 0 ? -res : res;
}

Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, int v) {
  const VarOrderPtr& ord = f.order();
  if (f.is_zero() || g.is_zero()) return Polynomial::zero(ord);
  int a = f.degree(v);
  int b = g.degree(v);
  if (a == 0 && b == 0) throw std::domain_error("resultant: both arguments constant in the variable");
  if (a == 0) return f.pow(static_cast<unsigned>(b));
  if (b == 0) return g.pow(static_cast<unsigned>(a));
  int n = a + b;
  auto fc = f.coeffs_wrt(v);  // fc[k] multiplies v^k
  auto gc = g.coeffs_wrt(v);
  auto at = [&](const std::vector<Polynomial>& c, int k) {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Polynomial::zero(ord);
  };
  std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(n),
                                         std::vector<Polynomial>(static_cast<std::size_t>(n)));
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = at(fc, a - (j - i));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < n; ++j) m[b + i][j] = at(gc, b - (j - i));
  // Bareiss fraction-free elimination
  int sgn = 1;
  Polynomial prev = Polynomial::constant(ord, 1);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Polynomial::zero(ord);
      std::swap(m[k], m[pivot]);
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Polynomial::zero(ord);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return sgn < 0 ? -det : det;
}

Polynomial discriminant(const Polynomial& f, int v) {
  int d = f.degree(v);
  if (d == 0) throw std::domain_error("discriminant of a polynomial constant in the variable");
  if (d == 1) return Polynomial::constant(f.order(), 1);
  Polynomial r = resultant(f, f.derivative(v), v);
  Polynomial q = divexact(r, f.leading_coeff(v));
  return (d % 4 == 2 || d % 4 == 3) ? -q : q;  // (-1)^(d(d-1)/2)
}

MonomialOrder MonomialOrder::lex_elim(VarOrderPtr ord) {
  std::vector<int> sig(static_cast<std::size_t>(ord->size()));
  for (int i = 0; i < ord->size(); ++i) sig[static_cast<std::size_t>(i)] = i;
  return MonomialOrder(Kind::Lex, std::move(sig));
}

MonomialOrder MonomialOrder::lex_main_first(VarOrderPtr ord) {
  std::vector<int> sig(static_cast<std::size_t>(ord->size()));
  for (int i = 0; i < ord->size(); ++i) sig[static_cast<std::size_t>(i)] = ord->size() - 1 - i;
  return MonomialOrder(Kind::Lex, std::move(sig));
}

MonomialOrder MonomialOrder::grevlex(VarOrderPtr ord) {
  std::vector<int> sig(static_cast<std::size_t>(ord->size()));
  for (int i = 0; i < ord->size(); ++i) sig[static_cast<std::size_t>(i)] = ord->size() - 1 - i;
  return MonomialOrder(Kind::GrevLex, std::move(sig));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::Lex) {
    for (int pos : significance_) {
      if (a.e[pos] != b.e[pos]) return a.e[pos] < b.e[pos] ? -1 : 1;
    }
    return 0;
  }
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // reverse part: compare least significant variables, lower exponent wins
  for (auto it = significance_.rbegin(); it != significance_.rend(); ++it) {
    int pos = *it;
    if (a.e[pos] != b.e[pos]) return a.e[pos] < b.e[pos] ? 1 : -1;
  }
  return 0;
}

namespace {

struct LeadTerm {
  Monomial mono;
  Rational coeff;
};

LeadTerm leading_term(const Polynomial& p, const MonomialOrder& mo) {
  const auto& ts = p.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (mo.compare(ts[i].mono, ts[best].mono) > 0) best = i;
  return {ts[best].mono, ts[best].coeff};
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  return m;
}

// Normalize a basis element: integer primitive, positive leading coefficient
// under mo.
Polynomial mo_normalized(const Polynomial& p, const MonomialOrder& mo) {
  if (p.is_zero()) return p;
  Polynomial n = p.normalized();
  if (leading_term(n, mo).coeff < 0) n = -n;
  return n;
}

}  // namespace

Polynomial reduce_modulo(const Polynomial& p, const std::vector<Polynomial>& basis,
                         const MonomialOrder& mo) {
  const VarOrderPtr& ord = p.order();
  Polynomial rem = Polynomial::zero(ord);
  Polynomial cur = p;
  while (!cur.is_zero()) {
    LeadTerm lt = leading_term(cur, mo);
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      LeadTerm lg = leading_term(g, mo);
      if (lg.mono.divides(lt.mono)) {
        Polynomial::Term t{lt.mono.quotient(lg.mono), lt.coeff / lg.coeff};
        cur = cur - g * Polynomial::from_terms(ord, {t});
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial::Term t{lt.mono, lt.coeff};
      rem = rem + Polynomial::from_terms(ord, {t});
      cur = cur - Polynomial::from_terms(ord, {t});
    }
  }
  return rem;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& mo) {
  if (gens.empty()) throw std::invalid_argument("groebner_basis: empty generator set");
  const VarOrderPtr& ord = gens.front().order();
  std::vector<Polynomial> g;
  for (const auto& p : gens)
    if (!p.is_zero()) g.push_back(mo_normalized(p, mo));
  if (g.empty()) throw std::invalid_argument("groebner_basis: all generators zero");

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
  };
  auto sugar_of = [&](const Polynomial& p) { return p.total_degree(); };
  std::list<Pair> pairs;
  auto add_pairs = [&](std::size_t k) {
    LeadTerm lk = leading_term(g[k], mo);
    for (std::size_t i = 0; i < k; ++i) {
      LeadTerm li = leading_term(g[i], mo);
      Monomial l = mono_lcm(li.mono, lk.mono);
      unsigned sug = std::max(sugar_of(g[i]) + l.quotient(li.mono).total_degree(),
                              sugar_of(g[k]) + l.quotient(lk.mono).total_degree());
      pairs.push_back({i, k, l, sug});
    }
  };
  for (std::size_t k = 0; k < g.size(); ++k) add_pairs(k);

  while (!pairs.empty()) {
    // sugar selection: smallest sugar, then smallest lcm
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      if (it->sugar < best->sugar ||
          (it->sugar == best->sugar && mo.compare(it->lcm, best->lcm) < 0))
        best = it;
    }
    Pair pr = *best;
    pairs.erase(best);

    LeadTerm li = leading_term(g[pr.i], mo);
    LeadTerm lj = leading_term(g[pr.j], mo);
    // Buchberger's first criterion: coprime leading monomials
    if (mono_lcm(li.mono, lj.mono).total_degree() == li.mono.total_degree() + lj.mono.total_degree())
      continue;
    // Buchberger's second (chain) criterion
    bool chained = false;
    for (std::size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      LeadTerm lk = leading_term(g[k], mo);
      if (!lk.mono.divides(pr.lcm)) continue;
      auto done = [&](std::size_t x, std::size_t y) {
        if (x > y) std::swap(x, y);
        for (const auto& q : pairs)
          if (q.i == x && q.j == y) return false;
        return true;
      };
      if (done(pr.i, k) && done(pr.j, k)) chained = true;
    }
    if (chained) continue;

    // S-polynomial
    Polynomial si = g[pr.i] * Polynomial::from_terms(
                                  ord, {{pr.lcm.quotient(li.mono), Rational(1) / li.coeff}});
    Polynomial sj = g[pr.j] * Polynomial::from_terms(
                                  ord, {{pr.lcm.quotient(lj.mono), Rational(1) / lj.coeff}});
    Polynomial s = reduce_modulo(si - sj, g, mo);
    if (!s.is_zero()) {
      g.push_back(mo_normalized(s, mo));
      add_pairs(g.size() - 1);
    }
  }

  // minimalize: drop elements whose lm is divisible by another's
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    LeadTerm li = leading_term(g[i], mo);
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      LeadTerm lj = leading_term(g[j], mo);
      if (lj.mono.divides(li.mono) && !(lj.mono == li.mono && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // fully reduce each element modulo the others
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = others.empty() ? minimal[i] : reduce_modulo(minimal[i], others, mo);
    if (!r.is_zero()) reduced.push_back(mo_normalized(r, mo));
  }
  if (reduced.empty()) reduced.push_back(Polynomial::constant(ord, 1));
  // unit ideal: collapse to {1}
  for (const auto& p : reduced)
    if (p.is_constant()) return {Polynomial::constant(ord, 1)};
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& x, const Polynomial& y) { return poly_cmp(x, y) < 0; });
  return reduced;
}

std::vector<Polynomial> groebner_basis(const PolySet& gens, const MonomialOrder& mo) {
  return groebner_basis(std::vector<Polynomial>(gens.begin(), gens.end()), mo);
}

bool zero_dimensional(const std::vector<Polynomial>& gens, const std::vector<int>& vars) {
  if (gens.empty()) throw std::invalid_argument("zero_dimensional: empty generator set");
  auto basis = groebner_basis(gens, MonomialOrder::grevlex(gens.front().order()));
  if (basis.size() == 1 && basis.front().is_constant()) return true;  // empty variety
  MonomialOrder mo = MonomialOrder::grevlex(gens.front().order());
  for (int v : vars) {
    bool found = false;
    for (const auto& p : basis) {
      LeadTerm lt = leading_term(p, mo);
      bool pure = lt.mono.e[v] > 0;
      for (std::size_t i = 0; i < lt.mono.e.size() && pure; ++i)
        if (static_cast<int>(i) != v && lt.mono.e[i] > 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace lazcad
