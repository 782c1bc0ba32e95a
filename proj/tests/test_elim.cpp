#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elim.hpp"
#include "test_util.hpp"

using namespace lazcad;
using lazcad::test::P;

TEST_CASE("resultants from the point/non-point curtain examples") {
  auto o = make_order({"x", "y", "z"});
  int z = *o->index_of("z");
  int y = *o->index_of("y");
  Polynomial f = P("x - y*z", o);
  Polynomial r1 = resultant(f, P("z - x", o), z);
  Polynomial r2 = resultant(f, P("z - y", o), z);
  CHECK(r1 == P("y*x - x", o));
  CHECK(r2 == P("y^2 - x", o));
  Polynomial rr = resultant(r1, r2, y);
  // x^2(1-x) up to sign
  Polynomial want = P("x^2 - x^3", o);
  CHECK((rr == want || rr == -want));
  CHECK(resultant(P("x^2 + y^2 - 1", o), P("z - x - 1", o), z) == P("x^2 + y^2 - 1", o));
}

TEST_CASE("resultant conventions and errors") {
  auto o = make_order({"x", "y"});
  int x = *o->index_of("x");
  CHECK_THROWS_AS(resultant(P("y", o), P("y + 1", o), x), std::domain_error);
  // one argument constant in v: res = f^deg(g) or g^deg(f)
  CHECK(resultant(P("y", o), P("x^2 - 1", o), x) == P("y^2", o));
  CHECK(resultant(P("x^2 - 1", o), P("y", o), x) == P("y^2", o));
  CHECK(resultant(Polynomial::zero(o), P("x", o), x).is_zero());
}

TEST_CASE("subresultant resultant equals Sylvester determinant bit-exactly") {
  auto o = make_order({"x", "y", "z"});
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int it = 0; checked < 200; ++it) {
    Polynomial f = test::random_nonzero_poly(rng, o, 4, 4);
    Polynomial g = test::random_nonzero_poly(rng, o, 4, 4);
    int v = static_cast<int>(rng() % 3);
    if (f.degree(v) == 0 && g.degree(v) == 0) continue;
    Polynomial prs = resultant(f, g, v);
    Polynomial syl = sylvester_resultant(f, g, v);
    CHECK(prs == syl);
    ++checked;
  }
}

TEST_CASE("resultant algebra: swap sign and multiplicativity") {
  auto o = make_order({"x", "y"});
  std::mt19937_64 rng(31337);
  int checked = 0;
  while (checked < 100) {
    Polynomial f = test::random_nonzero_poly(rng, o, 3, 3);
    Polynomial g = test::random_nonzero_poly(rng, o, 3, 3);
    Polynomial h = test::random_nonzero_poly(rng, o, 2, 2);
    int v = static_cast<int>(rng() % 2);
    int df = f.degree(v), dg = g.degree(v), dh = h.degree(v);
    if (df == 0 || dg == 0 || dh == 0) continue;
    Polynomial rfg = resultant(f, g, v);
    Polynomial rgf = resultant(g, f, v);
    if ((df * dg) % 2 == 0)
      CHECK(rfg == rgf);
    else
      CHECK(rfg == -rgf);
    CHECK(resultant(f, g * h, v) == rfg * resultant(f, h, v));
    ++checked;
  }
}

TEST_CASE("discriminant oracle: b^2 - 4ac on quadratics") {
  auto o = make_order({"x", "y"});
  int x = *o->index_of("x");
  CHECK(discriminant(P("x^2 - 1", o), x) == P("4", o));
  CHECK(discriminant(P("(x - 1)^2", o), x).is_zero());
  CHECK(discriminant(P("x^3 - 2*x^2 + x", o), x).is_zero());
  CHECK(discriminant(P("x - 7", o), x) == P("1", o));
  CHECK_THROWS_AS(discriminant(P("y", o), x), std::domain_error);

  std::mt19937_64 rng(555);
  std::uniform_int_distribution<int> cf(-9, 9);
  for (int it = 0; it < 100; ++it) {
    int a = cf(rng);
    if (a == 0) a = 2;
    int b = cf(rng), c = cf(rng);
    Polynomial q = P("x^2", o) * Rational(a) + P("x", o) * Rational(b) +
                   Polynomial::constant(o, Rational(c));
    CHECK(discriminant(q, x) == Polynomial::constant(o, Rational(b * b - 4 * a * c)));
  }
}

TEST_CASE("disc(fg) = disc(f) disc(g) res(f,g)^2 for monic pairs") {
  auto o = make_order({"x", "y"});
  int x = *o->index_of("x");
  std::mt19937_64 rng(909);
  int checked = 0;
  while (checked < 100) {
    // monic in x
    Polynomial f = Polynomial::variable(o, x).pow(1 + rng() % 3) + test::random_poly(rng, o, 1, 2);
    Polynomial g = Polynomial::variable(o, x).pow(1 + rng() % 3) + test::random_poly(rng, o, 1, 2);
    if (f.degree(x) + g.degree(x) < 2) continue;
    if (!gcd(f, g).is_constant()) continue;  // disc(fg) needs fg squarefree-ish to be interesting
    Polynomial lhs = discriminant(f * g, x);
    Polynomial r = resultant(f, g, x);
    Polynomial rhs = discriminant(f, x) * discriminant(g, x) * r * r;
    CHECK(lhs == rhs);
    ++checked;
  }
}

TEST_CASE("groebner basis of the quantifier-elimination system") {
  auto o = make_order({"u", "v", "y", "z", "x"});
  std::vector<Polynomial> gens = {P("-u*v + x", o), P("-u*v^2 + y", o), P("-u^2 + z", o)};
  auto basis = groebner_basis(gens, MonomialOrder::lex_elim(o));
  PolySet bs(o);
  for (const auto& b : basis) bs.insert(b);
  CHECK(bs.contains(P("v*x - y", o)));
  CHECK(bs.contains(P("u*v - x", o)));
  CHECK(bs.contains(P("u*x - v*z", o)));
  // every input reduces to zero modulo the basis
  for (const auto& g : gens) CHECK(reduce_modulo(g, basis, MonomialOrder::lex_elim(o)).is_zero());
}

TEST_CASE("groebner reduced form") {
  auto o = make_order({"x", "y"});
  auto mo = MonomialOrder::grevlex(o);
  auto b1 = groebner_basis(std::vector<Polynomial>{P("x", o), P("y", o)}, mo);
  REQUIRE(b1.size() == 2);
  CHECK(((b1[0] == P("x", o) && b1[1] == P("y", o)) || (b1[0] == P("y", o) && b1[1] == P("x", o))));
  auto b2 = groebner_basis(std::vector<Polynomial>{P("x^2 - 1", o), P("x - 1", o)}, mo);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0] == P("x - 1", o));
  // unit ideal
  auto b3 = groebner_basis(std::vector<Polynomial>{P("x", o), P("x + 1", o)}, mo);
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].is_constant());
}

TEST_CASE("groebner properties on random systems") {
  auto o = make_order({"x", "y"});
  std::mt19937_64 rng(321);
  auto mo = MonomialOrder::grevlex(o);
  for (int it = 0; it < 25; ++it) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2 + static_cast<int>(rng() % 2); ++k)
      gens.push_back(test::random_nonzero_poly(rng, o, 2, 3));
    auto basis = groebner_basis(gens, mo);
    for (const auto& g : gens) CHECK(reduce_modulo(g, basis, mo).is_zero());
    // reduced: no leading monomial divides another
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j || basis.size() == 1) continue;
        Polynomial r = reduce_modulo(basis[i], {basis[j]}, mo);
        CHECK(!r.is_zero());
      }
  }
}

TEST_CASE("zero dimensionality") {
  auto o = make_order({"x", "y"});
  CHECK(zero_dimensional({P("x^2", o), P("y - 1", o)}, {0, 1}));
  CHECK(!zero_dimensional({P("x*y", o)}, {0, 1}));
  CHECK(zero_dimensional({P("y^2 - 1", o), P("x^2", o)}, {0, 1}));
}
