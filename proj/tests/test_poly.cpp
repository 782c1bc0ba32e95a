#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace lazcad;
using lazcad::test::P;

static VarOrderPtr ord_xyzw() { return make_order({"x", "y", "z", "w"}); }

TEST_CASE("degree") {
  auto o = ord_xyzw();
  CHECK(P("x^2 + y^2*z - 2*y*z^2 + z*w", o).degree(*o->index_of("z")) == 2);
  CHECK(P("5", o).degree(*o->index_of("x")) == 0);
  auto o2 = make_order({"u", "v", "y"});
  CHECK(P("u*v^2 - y", o2).degree(*o2->index_of("v")) == 2);
}

TEST_CASE("leading and trailing coefficients") {
  auto o = make_order({"u", "v", "y", "z", "x"});
  CHECK(P("u*x - v*z", o).leading_coeff(*o->index_of("x")) == P("u", o));
  CHECK(P("v*x - y", o).leading_coeff(*o->index_of("x")) == P("v", o));
  CHECK(P("7", o).leading_coeff(*o->index_of("x")) == P("7", o));
  CHECK(P("u*v^2 - y", o).trailing_coeff(*o->index_of("y")) == P("u*v^2", o));
  auto o2 = ord_xyzw();
  CHECK(P("x - y*z", o2).trailing_coeff(*o2->index_of("z")) == P("x", o2));
  CHECK(P("x", o2).trailing_coeff(*o2->index_of("x")).is_zero());
}

TEST_CASE("content and primitive part") {
  auto o = ord_xyzw();
  int y = *o->index_of("y");
  auto [c1, p1] = content_and_primitive(P("x*y^2 - x", o), y);
  CHECK(c1 == P("x", o));
  CHECK(p1 == P("y^2 - 1", o));
  auto [c2, p2] = content_and_primitive(P("2*y + 4", o), y);
  CHECK(c2 == P("2", o));
  CHECK(p2 == P("y + 2", o));
  // content * primitive = p exactly
  CHECK(c1 * p1 == P("x*y^2 - x", o));
  CHECK_THROWS(content_and_primitive(Polynomial::zero(o), y));

  auto o5 = make_order({"u", "v", "y", "z", "x"});
  // degree 0 in x: content is the whole polynomial up to sign
  auto [c3, p3] = content_and_primitive(P("v*u^2 - v*z", o5), *o5->index_of("x"));
  CHECK(p3.is_constant());
  CHECK(c3 * p3 == P("v*u^2 - v*z", o5));
  auto [c4, p4] = content_and_primitive(P("v*u^2 - v*z", o5), *o5->index_of("z"));
  CHECK(c4 == P("v", o5));
  CHECK(p4 == P("u^2 - z", o5));
}

TEST_CASE("squarefree basis") {
  auto o = ord_xyzw();
  PolySet a(o);
  a.insert(P("(x - 1)^2 * x", o));
  PolySet fin = squarefree_basis(a, true);
  PolySet want(o);
  want.insert(P("x - 1", o));
  want.insert(P("x", o));
  CHECK(fin == want);

  PolySet b(o);
  b.insert(P("x^2 + 1", o));
  CHECK(squarefree_basis(b, true) == b);

  PolySet c(o);
  c.insert(P("x*y^2 - y^2 - x*z + z", o));
  PolySet wc(o);
  wc.insert(P("x - 1", o));
  wc.insert(P("y^2 - z", o));
  CHECK(squarefree_basis(c, true) == wc);

  // coarse: Yun parts only, no cross-element refinement
  PolySet d(o);
  d.insert(P("x^2 - 1", o));
  d.insert(P("x - 1", o));
  PolySet coarse = squarefree_basis(d, false);
  CHECK(coarse.size() == 2);
  PolySet finest = squarefree_basis(d, true);
  PolySet wf(o);
  wf.insert(P("x - 1", o));
  wf.insert(P("x + 1", o));
  CHECK(finest == wf);
}

TEST_CASE("substitute and derivative") {
  auto o = ord_xyzw();
  int x = *o->index_of("x");
  CHECK(P("x^2 + y^2*z - 2*y*z^2 + z*w", o).substitute(x, Rational(0)) ==
        P("y^2*z - 2*y*z^2 + z*w", o));
  Polynomial p = P("x^2 - 1", o);
  CHECK(p.substitute(x, Polynomial::variable(o, x)) == p);
  CHECK(P("x^2 - 1", o).substitute(x, Rational(1)).is_zero());
  CHECK(P("x^3 - 2*x^2 + x", o).derivative(x) == P("3*x^2 - 4*x + 1", o));
  CHECK(P("y", o).derivative(x).is_zero());
  int z = *o->index_of("z");
  CHECK(P("-1*y^2*z + x*w", o).derivative(z) == P("-1*y^2", o));
}

TEST_CASE("normalization idempotence and canonical equality") {
  auto o = ord_xyzw();
  // the term order reads the highest variable position first, so the y term
  // leads here and the normal form carries a positive y coefficient
  Polynomial p = P("2*x^2 - 4*y", o);
  CHECK(p.normalized() == P("2*y - x^2", o));
  CHECK(p.normalized().normalized() == p.normalized());
  CHECK(P("-3*x + 3", o).normalized() == P("x - 1", o));
  CHECK(P("1/2*x - 1/3", o).normalized() == P("3*x - 2", o));
}

TEST_CASE("ring axioms on random triples") {
  auto o = make_order({"x", "y", "z"});
  std::mt19937_64 rng(12345);
  for (int it = 0; it < 200; ++it) {
    Polynomial p = test::random_poly(rng, o, 3, 4);
    Polynomial q = test::random_poly(rng, o, 3, 4);
    Polynomial r = test::random_poly(rng, o, 3, 4);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
  }
}

TEST_CASE("content * primitive == p on random polynomials") {
  auto o = make_order({"x", "y", "z"});
  std::mt19937_64 rng(777);
  for (int it = 0; it < 200; ++it) {
    Polynomial p = test::random_nonzero_poly(rng, o, 4, 5);
    int v = static_cast<int>(rng() % 3);
    auto [c, pp] = content_and_primitive(p, v);
    CHECK(c * pp == p);
  }
}

TEST_CASE("squarefree basis properties on random products") {
  auto o = make_order({"x", "y"});
  std::mt19937_64 rng(4242);
  for (int it = 0; it < 60; ++it) {
    // product of small random factors, possibly repeated
    Polynomial prod = Polynomial::constant(o, 1);
    std::vector<Polynomial> factors;
    int nf = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < nf; ++k) {
      Polynomial f = test::random_nonzero_poly(rng, o, 2, 3);
      if (f.is_constant()) continue;
      unsigned mult = 1 + static_cast<unsigned>(rng() % 2);
      prod = prod * f.pow(mult);
      factors.push_back(f);
    }
    if (prod.is_constant()) continue;
    PolySet a(o);
    a.insert(prod);
    PolySet basis = squarefree_basis(a, true);
    const auto& bs = basis.elements();
    for (std::size_t i = 0; i < bs.size(); ++i) {
      // square-free: a repeated factor with positive degree in v would show
      // up as a positive v-degree of gcd(b, db/dv)
      for (int v = 0; v < o->size(); ++v) {
        if (bs[i].degree(v) == 0) continue;
        CHECK(gcd(bs[i], bs[i].derivative(v)).degree(v) == 0);
      }
      // pairwise coprime
      for (std::size_t j = i + 1; j < bs.size(); ++j)
        CHECK(gcd(bs[i], bs[j]).is_constant());
    }
    // the input is a constant times a product of powers of basis elements
    Polynomial rem = prod;
    for (int guard = 0; guard < 200 && !rem.is_constant(); ++guard) {
      bool divided = false;
      for (const auto& b : bs) {
        try {
          Polynomial q = divexact(rem, b);
          rem = q;
          divided = true;
          break;
        } catch (const std::domain_error&) {
        }
      }
      if (!divided) break;
    }
    CHECK(rem.is_constant());
  }
}

TEST_CASE("gcd basics") {
  auto o = make_order({"x", "y"});
  CHECK(gcd(P("2*y + 4", o), P("4*y + 8", o)) == P("2*y + 4", o));
  CHECK(gcd(P("x^2 - 1", o), P("x - 1", o)) == P("x - 1", o));
  CHECK(gcd(P("x*y - x", o), P("y^2 - 1", o)) == P("y - 1", o));
  CHECK(gcd(P("x^2 + 1", o), P("x - 5", o)).is_constant());
}

TEST_CASE("divexact errors when not exact") {
  auto o = make_order({"x", "y"});
  CHECK(divexact(P("x^2 - 1", o), P("x - 1", o)) == P("x + 1", o));
  CHECK_THROWS_AS(divexact(P("x^2 + 1", o), P("x - 1", o)), std::domain_error);
  CHECK_THROWS_AS(divexact(P("x", o), Polynomial::zero(o)), std::domain_error);
}

TEST_CASE("parser grammar and round trip") {
  auto o = make_order({"u", "v", "y", "z", "x"});
  CHECK(P("u*x - v*z", o) == P(" u * x - v * z ", o));
  CHECK(P("-u*v + x", o) == -P("u*v - x", o));
  CHECK(P("3/4*x^2", o) == P("x^2", o) * Rational(3, 4));
  CHECK(P("(x + 1)^2", o) == P("x^2 + 2*x + 1", o));
  CHECK_THROWS_AS(P("x +", o), ParseError);
  CHECK_THROWS_AS(P("q + 1", o), ParseError);
  CHECK_THROWS_AS(P("x/2", o), ParseError);

  std::mt19937_64 rng(99);
  for (int it = 0; it < 100; ++it) {
    Polynomial p = test::random_poly(rng, o, 3, 5);
    CHECK(P(p.to_string(), o) == p);
  }
}
