#include "realalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lazcad {

// ---------------------------------------------------------------------------
// exact interval arithmetic

namespace {

struct QInterval {
  Rational lo, hi;
};

QInterval iv_add(const QInterval& a, const QInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

QInterval iv_mul(const QInterval& a, const QInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
}

QInterval iv_scale(const QInterval& a, const Rational& s) {
  if (s >= 0) return {a.lo * s, a.hi * s};
  return {a.hi * s, a.lo * s};
}

QInterval iv_eval(const UniPoly& p, const QInterval& x) {
  QInterval acc{Rational(0), Rational(0)};
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = iv_mul(acc, x);
    acc.lo += p.coeff(static_cast<int>(i));
    acc.hi += p.coeff(static_cast<int>(i));
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraicNumber

struct AlgebraicNumber::State {
  mutable std::mutex m;
  Rational lo, hi;
};

namespace {

// refinement step on a locked state: requires sign-change certified open
// interval for the square-free polynomial d
void refine_locked(const UniPoly& d, Rational& lo, Rational& hi) {
  if (lo == hi) return;
  Rational mid = (lo + hi) / 2;
  Rational vm = d.eval(mid);
  if (vm == 0) {
    lo = mid;
    hi = mid;
    return;
  }
  if (sign(vm) == sign(d.eval(lo)))
    lo = mid;
  else
    hi = mid;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(of_rational(Rational(0))) {}

AlgebraicNumber AlgebraicNumber::of_rational(const Rational& q) {
  AlgebraicNumber a;
  a.defining_ = UniPoly(std::vector<Rational>{-q, Rational(1)});
  a.state_ = std::make_shared<State>();
  a.state_->lo = q;
  a.state_->hi = q;
  return a;
}

AlgebraicNumber AlgebraicNumber::root_of(UniPoly sqfree, const IsolatingInterval& iv) {
  if (sqfree.is_zero() || sqfree.degree() < 1) throw std::invalid_argument("root_of: bad defining polynomial");
  Rational lo = iv.lo, hi = iv.hi;
  if (lo == hi) {
    if (sqfree.eval(lo) != 0) throw std::invalid_argument("root_of: point interval is not a root");
    return of_rational(lo);
  }
  // tighten: endpoints must not be roots and must certify a sign change
  for (int guard = 0; guard < 10000; ++guard) {
    bool lz = sqfree.eval(lo) == 0, hz = sqfree.eval(hi) == 0;
    if (!lz && !hz && sign(sqfree.eval(lo)) != sign(sqfree.eval(hi))) break;
    Rational m1 = lo + (hi - lo) / 3;
    Rational m2 = lo + (hi - lo) * Rational(2, 3);
    if (sqfree.eval(m1) == 0) return of_rational(m1);
    if (sqfree.eval(m2) == 0) return of_rational(m2);
    if (sturm_count(sqfree, lo, m1) == 1)
      hi = m1;
    else if (sturm_count(sqfree, m1, m2) == 1) {
      lo = m1;
      hi = m2;
    } else {
      lo = m2;
    }
  }
  AlgebraicNumber a;
  a.defining_ = std::move(sqfree);
  a.state_ = std::make_shared<State>();
  a.state_->lo = lo;
  a.state_->hi = hi;
  return a;
}

bool AlgebraicNumber::is_rational() const {
  std::lock_guard<std::mutex> g(state_->m);
  return state_->lo == state_->hi;
}

Rational AlgebraicNumber::rational_value() const {
  std::lock_guard<std::mutex> g(state_->m);
  if (state_->lo != state_->hi) throw std::domain_error("not (known) rational");
  return state_->lo;
}

std::pair<Rational, Rational> AlgebraicNumber::interval() const {
  std::lock_guard<std::mutex> g(state_->m);
  return {state_->lo, state_->hi};
}

void AlgebraicNumber::refine() const {
  std::lock_guard<std::mutex> g(state_->m);
  refine_locked(defining_, state_->lo, state_->hi);
}

Rational AlgebraicNumber::approx(const Rational& width) const {
  std::lock_guard<std::mutex> g(state_->m);
  while (state_->hi - state_->lo >= width) refine_locked(defining_, state_->lo, state_->hi);
  return (state_->lo + state_->hi) / 2;
}

AlgebraicNumber AlgebraicNumber::affine_image(const Rational& a, const Rational& b) const {
  if (b == 0) return of_rational(a);
  if (is_rational()) return of_rational(a + b * rational_value());
  // defining for a + b*alpha: d((x-a)/b) cleared of denominators
  UniPoly d = defining_.compose(UniPoly::linear(-a / b, Rational(1) / b));
  d = squarefree_part(d);
  auto [lo, hi] = interval();
  Rational nlo = a + b * lo, nhi = a + b * hi;
  if (nlo > nhi) std::swap(nlo, nhi);
  return root_of(d, {nlo, nhi});
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return lazcad::to_string(rational_value());
  auto [lo, hi] = interval();
  std::ostringstream os;
  os << "root(" << defining_.to_string() << ", (" << lo << ", " << hi << "))";
  return os.str();
}

int sign_of_upoly_at(const UniPoly& q, const AlgebraicNumber& a) {
  if (q.is_zero()) return 0;
  if (a.is_rational()) return sign(q.eval(a.rational_value()));
  UniPoly z = gcd(q, a.defining_);
  if (z.degree() >= 1) {
    auto [lo, hi] = a.interval();
    if (sturm_count(z, lo, hi) == 1) return 0;
  }
  // q(a) != 0: refine until the interval enclosure excludes zero
  for (;;) {
    auto [lo, hi] = a.interval();
    QInterval e = iv_eval(q, {lo, hi});
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    a.refine();
  }
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.state_ == b.state_) return 0;
  if (a.is_rational() && b.is_rational()) {
    Rational x = a.rational_value(), y = b.rational_value();
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  UniPoly g = gcd(a.defining_, b.defining_);
  for (;;) {
    auto [la, ha] = a.interval();
    auto [lb, hb] = b.interval();
    bool ra = la == ha, rb = lb == hb;
    // irrational values lie strictly inside their open intervals, so a
    // shared endpoint still separates unless both are that rational point
    if (ha < lb || (ha == lb && !(ra && rb))) return -1;
    if (hb < la || (hb == la && !(ra && rb))) return 1;
    if (g.degree() >= 1 && sign_of_upoly_at(g, a) == 0 && sign_of_upoly_at(g, b) == 0) {
      Rational wl = std::min(la, lb), wh = std::max(ha, hb);
      if (sturm_count(g, wl, wh) == 1) return 0;
    }
    a.refine();
    b.refine();
  }
}

std::vector<AlgebraicNumber> real_roots_of(const UniPoly& f) {
  std::vector<AlgebraicNumber> out;
  UniPoly sf = squarefree_part(f);
  if (sf.degree() < 1) return out;
  for (const auto& iv : isolate_real_roots(sf)) out.push_back(AlgebraicNumber::root_of(sf, iv));
  return out;
}

UniPoly upoly_of(const Polynomial& p, int var) {
  std::vector<Rational> c(static_cast<std::size_t>(p.degree(var)) + 1, Rational(0));
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.mono.e.size(); ++i)
      if (static_cast<int>(i) != var && t.mono.e[i] != 0)
        throw std::invalid_argument("polynomial is not univariate in the requested variable");
    c[t.mono.e[static_cast<std::size_t>(var)]] += t.coeff;
  }
  return UniPoly(std::move(c));
}

Polynomial poly_of(const UniPoly& u, const VarOrderPtr& ord, int var) {
  std::vector<Polynomial::Term> terms;
  for (int k = 0; k <= u.degree(); ++k) {
    if (u.coeff(k) == 0) continue;
    Monomial m{std::vector<uint32_t>(static_cast<std::size_t>(ord->size()), 0u)};
    m.e[static_cast<std::size_t>(var)] = static_cast<uint32_t>(k);
    terms.push_back({std::move(m), u.coeff(k)});
  }
  return Polynomial::from_terms(ord, std::move(terms));
}

std::vector<AlgebraicNumber> isolate_roots(const Polynomial& f, int var) {
  if (f.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  return real_roots_of(upoly_of(f, var));
}

Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  for (;;) {
    auto [la, ha] = a.interval();
    auto [lb, hb] = b.interval();
    bool ra = la == ha, rb = lb == hb;
    if (ra && rb) return (la + lb) / 2;
    if (ha < lb) return (ha + lb) / 2;       // a <= ha < q < lb <= b, strict on both sides
    if (ha == lb && !ra && !rb) return ha;   // open endpoints: a < ha = lb < b
    a.refine();
    b.refine();
  }
}

// ---------------------------------------------------------------------------
// SamplePoint

SamplePoint::SamplePoint() : gen_(AlgebraicNumber::of_rational(Rational(0))) {}

bool SamplePoint::all_rational() const {
  for (const auto& c : coords_)
    if (c.degree() > 0) return false;
  return true;
}

SamplePoint SamplePoint::prefix(int k) const {
  SamplePoint r = *this;
  r.coords_.resize(static_cast<std::size_t>(k));
  return r;
}

AlgebraicNumber SamplePoint::coordinate(int i) const {
  const UniPoly& c = coords_.at(static_cast<std::size_t>(i));
  if (c.degree() <= 0) return AlgebraicNumber::of_rational(c.is_zero() ? Rational(0) : c.coeff(0));
  if (gen_.is_rational()) return AlgebraicNumber::of_rational(c.eval(gen_.rational_value()));
  if (c.degree() == 1 ) {
    // affine image of the generator
    return gen_.affine_image(c.coeff(0), c.coeff(1));
  }
  // defining polynomial for the coordinate value: res_g(x - c(g), U(g))
  auto ord2 = make_order({"@g", "@x"});
  Polynomial A = Polynomial::variable(ord2, 1) - poly_of(c, ord2, 0);
  Polynomial U = poly_of(gen_.defining(), ord2, 0);
  UniPoly d = squarefree_part(upoly_of(resultant(A, U, 0), 1));
  // refine the generator until the image interval isolates one root of d
  for (;;) {
    auto [lo, hi] = gen_.interval();
    QInterval e = iv_eval(c, {lo, hi});
    if (sturm_count(d, e.lo, e.hi) == 1 && d.eval(e.lo) != 0) {
      return AlgebraicNumber::root_of(d, {e.lo, e.hi});
    }
    gen_.refine();
  }
}

std::vector<Rational> SamplePoint::approx(const Rational& width) const {
  std::vector<Rational> out;
  for (int i = 0; i < level(); ++i) out.push_back(coordinate(i).approx(width));
  return out;
}

std::string SamplePoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < level(); ++i) {
    if (i) os << ", ";
    os << coordinate(i).to_string();
  }
  os << ")";
  return os.str();
}

bool equal_points(const SamplePoint& a, const SamplePoint& b) {
  if (a.level() != b.level()) return false;
  for (int i = 0; i < a.level(); ++i)
    if (compare(a.coordinate(i), b.coordinate(i)) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// modular (D5) univariate arithmetic over Q[w]/(W), with dynamic splitting
// of W so that every leading coefficient is invertible at the tracked root

namespace {

struct ModCtx {
  UniPoly mod;                    // current defining factor; always has the root in iv
  const AlgebraicNumber* num;     // tracked root (interval refinement source)

  UniPoly reduce(const UniPoly& v) const { return divmod(v, mod).second; }

  // value test at the tracked root; may split `mod` (value-preserving)
  bool value_zero(const UniPoly& v0) {
    UniPoly v = reduce(v0);
    if (v.is_zero()) return true;
    if (v.degree() == 0) return false;
    for (;;) {
      UniPoly g = gcd(v, mod);
      if (g.degree() < 1) return false;
      auto [lo, hi] = num->interval();
      if (sturm_count(g, lo, hi) == 1) return true;
      mod = divmod(mod, g).first;  // split away the foreign factor
      if (mod.degree() < 1) throw std::logic_error("modular split lost the tracked root");
      v = reduce(v);
      if (v.is_zero()) return true;
      if (v.degree() == 0) return false;
    }
  }

  int value_sign(const UniPoly& v0) {
    UniPoly v = reduce(v0);
    if (value_zero(v)) return 0;
    v = reduce(v);
    for (;;) {
      auto [lo, hi] = num->interval();
      QInterval e = iv_eval(v, {lo, hi});
      if (e.lo > 0) return 1;
      if (e.hi < 0) return -1;
      num->refine();
    }
  }

  // inverse modulo `mod`; requires nonzero value (call value_zero first)
  UniPoly inverse(const UniPoly& v0) {
    UniPoly v = reduce(v0);
    for (;;) {
      UniPoly g = gcd(v, mod);
      if (g.degree() < 1) break;
      mod = divmod(mod, g).first;  // value nonzero, so the root is not in g
      if (mod.degree() < 1) throw std::logic_error("modular split lost the tracked root");
      v = reduce(v);
    }
    // extended Euclid: a*v + b*mod = 1
    UniPoly r0 = mod, r1 = v;
    UniPoly s0 = UniPoly(), s1 = UniPoly::constant(Rational(1));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      UniPoly s = s0 - q * s1;
      r0 = r1;
      r1 = r;
      s0 = s1;
      s1 = s;
    }
    if (r0.degree() != 0) throw std::logic_error("modular inverse failed");
    return reduce(s0 * (Rational(1) / r0.coeff(0)));
  }
};

// polynomial in one free variable with coefficients in Q[w]/(mod)
using GPoly = std::vector<UniPoly>;  // index = degree in the free variable

void gp_trim(GPoly& f, ModCtx& ctx) {
  for (auto& c : f) c = ctx.reduce(c);
  while (!f.empty() && ctx.value_zero(f.back())) f.pop_back();
  for (auto& c : f) c = ctx.reduce(c);
}

GPoly gp_derivative(const GPoly& f) {
  GPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rational(static_cast<long>(i)));
  return d;
}

// remainder of f by g (g trimmed, leading value nonzero)
GPoly gp_rem(const GPoly& f0, const GPoly& g, ModCtx& ctx) {
  GPoly f = f0;
  gp_trim(f, ctx);
  if (g.empty()) throw std::domain_error("gp_rem by zero");
  UniPoly linv = ctx.inverse(g.back());
  while (f.size() >= g.size()) {
    UniPoly c = ctx.reduce(f.back() * linv);
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[i + shift] = ctx.reduce(f[i + shift] - c * g[i]);
    gp_trim(f, ctx);
    if (f.empty()) break;
  }
  return f;
}

// monic gcd of the values of f and g over Q(w0)
GPoly gp_gcd(const GPoly& a0, const GPoly& b0, ModCtx& ctx) {
  GPoly a = a0, b = b0;
  gp_trim(a, ctx);
  gp_trim(b, ctx);
  while (!b.empty()) {
    GPoly r = gp_rem(a, b, ctx);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    UniPoly linv = ctx.inverse(a.back());
    for (auto& c : a) c = ctx.reduce(c * linv);
  }
  return a;
}

GPoly gp_quot(const GPoly& f0, const GPoly& g, ModCtx& ctx) {
  GPoly f = f0;
  gp_trim(f, ctx);
  if (g.empty()) throw std::domain_error("gp_quot by zero");
  UniPoly linv = ctx.inverse(g.back());
  if (f.size() < g.size()) return {};
  GPoly q(f.size() - g.size() + 1);
  while (f.size() >= g.size()) {
    UniPoly c = ctx.reduce(f.back() * linv);
    std::size_t shift = f.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i)
      f[i + shift] = ctx.reduce(f[i + shift] - c * g[i]);
    gp_trim(f, ctx);
    if (f.empty()) break;
  }
  return q;
}

}  // namespace

SamplePoint SamplePoint::extended(const AlgebraicNumber& value) const {
  SamplePoint r = *this;
  if (value.is_rational()) {
    r.coords_.push_back(UniPoly::constant(value.rational_value()));
    return r;
  }
  if (gen_.is_rational()) {
    // substitute the (rational) old generator into existing coordinate
    // expressions, then adopt the new value as generator
    Rational g0 = gen_.rational_value();
    for (auto& c : r.coords_)
      if (c.degree() > 0) c = UniPoly::constant(c.eval(g0));
    r.gen_ = value;
    r.coords_.push_back(UniPoly::linear(Rational(0), Rational(1)));
    return r;
  }
  // primitive element w = theta + lambda * gamma
  const UniPoly& U = gen_.defining();
  const UniPoly& R = value.defining();
  auto ord2 = make_order({"@t", "@w"});
  for (long lambda = 1; lambda <= 64; ++lambda) {
    // W(w) = res_t(U(t), R(w - lambda t))
    Polynomial Ut = poly_of(U, ord2, 0);
    Polynomial inner =
        Polynomial::variable(ord2, 1) - Polynomial::variable(ord2, 0) * Rational(lambda);
    Polynomial Rw = poly_of(R, ord2, 1).substitute(1, inner);
    UniPoly W = squarefree_part(upoly_of(resultant(Ut, Rw, 0), 1));
    if (W.degree() < 1) continue;
    // isolate w0 = theta + lambda*gamma among the roots of W
    AlgebraicNumber w0;
    for (int guard = 0;; ++guard) {
      auto [gl, gh] = gen_.interval();
      auto [tl, th] = value.interval();
      Rational wl = tl + Rational(lambda) * gl, wh = th + Rational(lambda) * gh;
      if (W.eval(wl) != 0 && W.eval(wh) != 0 && sturm_count(W, wl, wh) == 1) {
        w0 = AlgebraicNumber::root_of(W, {wl, wh});
        break;
      }
      gen_.refine();
      value.refine();
      if (guard > 4000) throw std::logic_error("primitive element isolation failed");
    }
    // gcd(U(t), R(w - lambda t)) over Q[w]/(W): degree 1 for good lambda
    ModCtx ctx{w0.defining(), &w0};
    GPoly A;  // U(t): constant coefficients
    for (int k = 0; k <= U.degree(); ++k) A.push_back(UniPoly::constant(U.coeff(k)));
    GPoly B;  // R(w - lambda t) as a polynomial in t over Q[w]
    {
      // expand R(w - lambda t) = sum_j R_j (w - lambda t)^j
      std::vector<std::vector<UniPoly>> pw;  // (w - lambda t)^j as t-coeff lists
      std::vector<UniPoly> one{UniPoly::constant(Rational(1))};
      pw.push_back(one);
      std::vector<UniPoly> base{UniPoly::linear(Rational(0), Rational(1)),
                                UniPoly::constant(Rational(-lambda))};
      for (int j = 1; j <= R.degree(); ++j) {
        const auto& prev = pw.back();
        std::vector<UniPoly> cur(prev.size() + 1, UniPoly());
        for (std::size_t i = 0; i < prev.size(); ++i) {
          cur[i] = cur[i] + prev[i] * base[0];
          cur[i + 1] = cur[i + 1] + prev[i] * base[1];
        }
        pw.push_back(std::move(cur));
      }
      for (int j = 0; j <= R.degree(); ++j) {
        if (R.coeff(j) == 0) continue;
        const auto& po = pw[static_cast<std::size_t>(j)];
        if (B.size() < po.size()) B.resize(po.size());
        for (std::size_t i = 0; i < po.size(); ++i) B[i] = B[i] + po[i] * R.coeff(j);
      }
    }
    GPoly g = gp_gcd(A, B, ctx);
    if (g.size() != 2) continue;  // bad lambda
    // g = t + c0(w) monic: gamma = -c0(w0)
    UniPoly gamma_expr = ctx.reduce(-g[0]);
    UniPoly theta_expr =
        ctx.reduce(UniPoly::linear(Rational(0), Rational(1)) - gamma_expr * Rational(lambda));
    // narrow the modulus until the defining identities hold
    for (int guard = 0; guard < 256; ++guard) {
      UniPoly e1 = ctx.reduce(U.compose(gamma_expr));
      UniPoly e2 = ctx.reduce(R.compose(theta_expr));
      if (e1.is_zero() && e2.is_zero()) break;
      UniPoly bad = e1.is_zero() ? e2 : e1;
      UniPoly split = gcd(ctx.mod, bad);
      if (split.degree() < 1 || split.degree() == ctx.mod.degree())
        throw std::logic_error("primitive element verification failed");
      ctx.mod = split;
      gamma_expr = ctx.reduce(gamma_expr);
      theta_expr = ctx.reduce(theta_expr);
    }
    // rebuild the point over the new generator
    SamplePoint out;
    auto [wl, wh] = w0.interval();
    // ctx.mod divides W and still has w0 inside the interval
    out.gen_ = AlgebraicNumber::root_of(ctx.mod, {wl, wh});
    for (const auto& c : coords_) {
      UniPoly nc = divmod(c.compose(gamma_expr), ctx.mod).second;
      out.coords_.push_back(nc);
    }
    out.coords_.push_back(theta_expr);
    return out;
  }
  throw std::logic_error("no primitive element found (lambda exhausted)");
}

// ---------------------------------------------------------------------------
// sign_at

int sign_at(const Polynomial& p, const SamplePoint& s) {
  if (p.is_zero()) return 0;
  if (p.max_var() >= s.level())
    throw std::invalid_argument("sign_at: point level below polynomial variables");
  if (s.all_rational()) {
    std::vector<Rational> pt(static_cast<std::size_t>(p.nvars()), Rational(0));
    for (int i = 0; i < s.level() && i < p.nvars(); ++i) {
      const UniPoly& c = s.coord_expr(i);
      pt[static_cast<std::size_t>(i)] = c.is_zero() ? Rational(0) : c.coeff(0);
    }
    return sign(p.evaluate(pt));
  }
  // assemble p(coords) as a univariate polynomial in the generator
  const UniPoly& U = s.generator().defining();
  auto redu = [&](const UniPoly& v) { return divmod(v, U).second; };
  // cache powers of coordinate expressions
  UniPoly acc;  // zero
  for (const auto& t : p.terms()) {
    UniPoly term = UniPoly::constant(t.coeff);
    for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
      for (uint32_t k = 0; k < t.mono.e[i]; ++k)
        term = redu(term * s.coord_expr(static_cast<int>(i)));
    }
    acc = acc + term;
  }
  acc = redu(acc);
  return sign_of_upoly_at(acc, s.generator());
}

// ---------------------------------------------------------------------------
// PointView

PointView::PointView(SamplePoint s, VarOrderPtr prob) : point_(std::move(s)), prob_(std::move(prob)) {
  std::vector<std::string> names = prob_->names();
  names.push_back("@g");
  ext_ = make_order(std::move(names));
  gpos_ = prob_->size();
  trivial_ = point_.generator().is_rational();
  if (trivial_)
    grat_ = point_.generator().rational_value();
  else
    u_ = point_.generator().defining();
}

Polynomial PointView::embed(const Polynomial& p) const {
  std::vector<int> map(static_cast<std::size_t>(prob_->size()));
  for (int i = 0; i < prob_->size(); ++i) map[static_cast<std::size_t>(i)] = i;
  return p.embedded(ext_, map);
}

Polynomial PointView::coord_poly(int i) const {
  const UniPoly& c = point_.coord_expr(i);
  if (trivial_) return Polynomial::constant(ext_, c.is_zero() ? Rational(0) : c.eval(grat_));
  return poly_of(c, ext_, gpos_);
}

Polynomial PointView::reduce(const Polynomial& f) const {
  if (trivial_) return f.substitute(gpos_, grat_);
  if (f.degree(gpos_) < u_.degree()) return f;
  // reduce gamma-degree via precomputed powers of gamma modulo u_
  int dmax = f.degree(gpos_);
  std::vector<UniPoly> pows(static_cast<std::size_t>(dmax) + 1);
  pows[0] = UniPoly::constant(Rational(1));
  UniPoly x = UniPoly::linear(Rational(0), Rational(1));
  for (int k = 1; k <= dmax; ++k) pows[static_cast<std::size_t>(k)] = divmod(pows[static_cast<std::size_t>(k - 1)] * x, u_).second;
  Polynomial out = Polynomial::zero(ext_);
  auto cs = f.coeffs_wrt(gpos_);
  for (int k = 0; k < static_cast<int>(cs.size()); ++k) {
    if (cs[static_cast<std::size_t>(k)].is_zero()) continue;
    out = out + cs[static_cast<std::size_t>(k)] * poly_of(pows[static_cast<std::size_t>(k)], ext_, gpos_);
  }
  return out;
}

UniPoly PointView::gamma_part(const Polynomial& f) const {
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < t.mono.e.size(); ++i)
      if (static_cast<int>(i) != gpos_ && t.mono.e[i] != 0)
        throw std::invalid_argument("gamma_part: free variables remain");
  return upoly_of(f, gpos_);
}

bool PointView::unipoly_value_zero(const UniPoly& v) const {
  if (trivial_) return v.eval(grat_) == 0;
  ModCtx ctx{u_, &point_.generator()};
  bool z = ctx.value_zero(v);
  u_ = ctx.mod;
  return z;
}

int PointView::unipoly_value_sign(const UniPoly& v) const {
  if (trivial_) return sign(v.eval(grat_));
  ModCtx ctx{u_, &point_.generator()};
  int s = ctx.value_sign(v);
  u_ = ctx.mod;
  return s;
}

bool PointView::is_value_zero(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (trivial_) return f.substitute(gpos_, grat_).is_zero();
  // bucket gamma-coefficients by the free-variable monomial
  std::map<std::vector<uint32_t>, std::vector<Rational>> buckets;
  for (const auto& t : f.terms()) {
    std::vector<uint32_t> key = t.mono.e;
    uint32_t gdeg = key[static_cast<std::size_t>(gpos_)];
    key[static_cast<std::size_t>(gpos_)] = 0;
    auto& vec = buckets[key];
    if (vec.size() <= gdeg) vec.resize(gdeg + 1, Rational(0));
    vec[gdeg] += t.coeff;
  }
  for (auto& [key, vec] : buckets) {
    if (!unipoly_value_zero(UniPoly(std::move(vec)))) return false;
  }
  return true;
}

int PointView::value_sign(const Polynomial& f) const { return unipoly_value_sign(gamma_part(f)); }

std::vector<std::pair<AlgebraicNumber, unsigned>> PointView::real_roots(const Polynomial& f,
                                                                        int xvar) const {
  std::vector<std::pair<AlgebraicNumber, unsigned>> out;
  if (f.is_zero()) throw std::domain_error("real_roots of the zero polynomial");
  // trivial/rational-coefficient path
  Polynomial fr = trivial_ ? f.substitute(gpos_, grat_) : reduce(f);
  if (fr.degree(gpos_) == 0) {
    UniPoly u = upoly_of(fr, xvar);
    if (u.is_zero()) throw std::domain_error("real_roots: value is identically zero");
    if (u.degree() == 0) return out;
    UniPoly usf = squarefree_part(u);
    for (const auto& iv : isolate_real_roots(usf)) {
      AlgebraicNumber root = AlgebraicNumber::root_of(usf, iv);
      unsigned mult = 1;
      UniPoly h = gcd(u, u.derivative());
      while (h.degree() >= 1 && sign_of_upoly_at(h, root) == 0) {
        ++mult;
        h = gcd(h, h.derivative());
      }
      out.push_back({std::move(root), mult});
    }
    return out;
  }

  // general path: D5 arithmetic over Q[g]/(u_)
  ModCtx ctx{u_, &point_.generator()};
  auto to_gpoly = [&](const Polynomial& p) {
    GPoly g(static_cast<std::size_t>(p.degree(xvar)) + 1);
    auto cs = p.coeffs_wrt(xvar);
    for (std::size_t k = 0; k < cs.size(); ++k) g[k] = upoly_of(cs[k], gpos_);
    return g;
  };
  GPoly F = to_gpoly(fr);
  gp_trim(F, ctx);
  if (F.empty()) {
    u_ = ctx.mod;
    throw std::domain_error("real_roots: value is identically zero");
  }
  if (F.size() == 1) {
    u_ = ctx.mod;
    return out;
  }
  // square-free value
  GPoly G1 = gp_gcd(F, gp_derivative(F), ctx);
  GPoly Fsf = G1.size() <= 1 ? F : gp_quot(F, G1, ctx);
  gp_trim(Fsf, ctx);
  // candidates: res_gamma(Fsf, u)
  Polynomial fsf_ext = Polynomial::zero(ext_);
  for (std::size_t k = 0; k < Fsf.size(); ++k) {
    Polynomial xk = Polynomial::variable(ext_, xvar).pow(static_cast<unsigned>(k));
    fsf_ext = fsf_ext + poly_of(Fsf[k], ext_, gpos_) * xk;
  }
  // guard: remove common factors of u and fsf (value nonzero keeps the root)
  for (;;) {
    Polynomial uext = poly_of(ctx.mod, ext_, gpos_);
    Polynomial shared = gcd(fsf_ext, uext);
    if (shared.is_constant()) break;
    UniPoly sh = upoly_of(shared, gpos_);
    ctx.mod = divmod(ctx.mod, sh.monic()).first;
    if (ctx.mod.degree() < 1) throw std::logic_error("real_roots: modulus exhausted");
  }
  UniPoly R = upoly_of(resultant(fsf_ext, poly_of(ctx.mod, ext_, gpos_), gpos_), xvar);
  if (R.is_zero()) throw std::logic_error("real_roots: vanishing resultant after guard");
  UniPoly Rsf = squarefree_part(R);
  std::vector<AlgebraicNumber> cands;
  for (const auto& iv : isolate_real_roots(Rsf)) cands.push_back(AlgebraicNumber::root_of(Rsf, iv));
  if (cands.empty()) {
    u_ = ctx.mod;
    return out;
  }
  // separating rationals s_0 < c_1 < s_1 < ... < c_m < s_m
  for (std::size_t i = 0; i + 1 < cands.size(); ++i) {
    while (true) {
      auto [l1, h1] = cands[i].interval();
      auto [l2, h2] = cands[i + 1].interval();
      if (h1 < l2 || (h1 == l2 && !cands[i].is_rational() && !cands[i + 1].is_rational())) break;
      if (cands[i].is_rational() && cands[i + 1].is_rational()) break;
      cands[i].refine();
      cands[i + 1].refine();
    }
  }
  std::vector<Rational> seps;
  seps.push_back(cands.front().interval().first - 1);
  for (std::size_t i = 0; i + 1 < cands.size(); ++i)
    seps.push_back(rational_between(cands[i], cands[i + 1]));
  seps.push_back(cands.back().interval().second + 1);
  auto value_sign_at = [&](const GPoly& g, const Rational& q) {
    UniPoly v;
    Rational qk(1);
    for (std::size_t k = 0; k < g.size(); ++k) {
      v = v + g[k] * qk;
      qk *= q;
    }
    return ctx.value_sign(v);
  };
  std::vector<int> sigs;
  for (const auto& q : seps) sigs.push_back(value_sign_at(Fsf, q));
  // confirmed roots: sign changes across candidates
  std::vector<AlgebraicNumber> roots;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (sigs[i] != sigs[i + 1] ) roots.push_back(cands[i]);
  }
  // multiplicities via the gcd chain
  for (auto& r : roots) {
    unsigned mult = 1;
    GPoly H = G1;
    gp_trim(H, ctx);
    while (H.size() >= 2) {
      // is r a root of the value of H? sign-change of its square-free value
      GPoly Hg = gp_gcd(H, gp_derivative(H), ctx);
      GPoly Hsf = Hg.size() <= 1 ? H : gp_quot(H, Hg, ctx);
      gp_trim(Hsf, ctx);
      if (Hsf.size() < 2) break;
      // locate r among separators: sign of Hsf just left/right of r
      std::size_t idx = 0;
      while (idx < cands.size() && compare(cands[idx], r) != 0) ++idx;
      int sl = value_sign_at(Hsf, seps[idx]);
      int sr = value_sign_at(Hsf, seps[idx + 1]);
      if (sl == sr) break;
      ++mult;
      H = gp_gcd(H, gp_derivative(H), ctx);
      gp_trim(H, ctx);
    }
    out.push_back({r, mult});
  }
  u_ = ctx.mod;
  return out;
}

}  // namespace lazcad
