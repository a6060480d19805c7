// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "charvar/error.hpp"
#include "charvar/polyring.hpp"
#include "charvar/rng.hpp"

using namespace chv;

namespace {

Polynomial P(const VariableSet& v, const char* s) { return Polynomial::parse(v, s); }

Polynomial random_poly(Rng& rng, const VariableSet& vs, int terms, int maxdeg) {
  Polynomial p(vs);
  for (int t = 0; t < terms; ++t) {
    Exponent e(vs.size(), 0);
    int budget = rng.integer(0, maxdeg);
    for (int k = 0; k < budget; ++k) e[rng.integer(0, int(vs.size()) - 1)]++;
    p.add_term(e, Rational(rng.integer(-9, 9), rng.integer(1, 4)));
  }
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  auto& V = vars_f2();
  CHECK((P(V, "x+y") * P(V, "x-y")) == P(V, "x^2 - y^2"));
  CHECK(P(V, "x^2+y^2+z^2-x*y*z-2").evaluate({0, 0, 0}) == cplx(-2));
  CHECK(P(V, "(x+1)^3") == P(V, "x^3 + 3*x^2 + 3*x + 1"));
  CHECK(P(V, "3/2*x - x/2") == P(V, "x"));
  CHECK((P(V, "x") - P(V, "x")).is_zero());
  CHECK(P(V, "0.25*y") == P(V, "y/4"));
}

TEST_CASE("substitution: Basic-Identity flip") {
  auto& V = vars_f2();
  // z -> x y - z' (reuse the name z for z')
  Polynomial p = P(V, "x*y - z");
  Polynomial q = p.substitute({{"x", P(V, "x")}, {"y", P(V, "y")}, {"z", P(V, "x*y - z")}});
  CHECK(q == P(V, "z"));
}

TEST_CASE("printing in graded lex order") {
  auto& V = vars_f2();
  CHECK(P(V, "1 - z + 3/2*x^2*y").str() == "3/2*x^2*y - z + 1");
  CHECK(P(V, "x^2 + y^2 + z^2 - x*y*z - 2").str() == "-x*y*z + x^2 + y^2 + z^2 - 2");
  CHECK(Polynomial(V).str() == "0");
  for (const char* s : {"3/2*x^2*y - z + 1", "-x*y*z + x^2 + y^2 + z^2 - 2", "-7/3"})
    CHECK(P(V, s).str() == s);
}

TEST_CASE("json round trip") {
  auto& V = vars_f3();
  Polynomial p = P(V, "-5/7*x1^2*x123 + x23 - 1");
  CHECK(Polynomial::from_json(p.json()) == p);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P(vars_f2(), "x + w"), UsageError);
  CHECK_THROWS_AS(P(vars_f2(), "x +"), UsageError);
  CHECK_THROWS_AS(P(vars_f2(), "x / y"), UsageError);
  CHECK_THROWS_AS(P(vars_f2(), "(x"), UsageError);
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5e1") == Rational(25));
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("abc"), UsageError);
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    auto& V = vars_s12();
    Polynomial a = random_poly(rng, V, 5, 3), b = random_poly(rng, V, 5, 3),
               c = random_poly(rng, V, 5, 3);
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a + b) == (b + a));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluate commutes with substitute") {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    Polynomial p = random_poly(rng, vars_f3(), 6, 4);
    std::vector<Polynomial> m;
    for (std::size_t i = 0; i < vars_f3().size(); ++i) m.push_back(random_poly(rng, vars_f2(), 3, 2));
    std::vector<cplx> a{rng.complex_box(), rng.complex_box(), rng.complex_box()};
    std::vector<cplx> am;
    for (const auto& q : m) am.push_back(q.evaluate(a));
    cplx lhs = p.substitute(m).evaluate(a), rhs = p.evaluate(am);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(rhs)));
  }
}

TEST_CASE("exact evaluation") {
  Polynomial p = P(vars_f2(), "x^2 + y^2 + z^2 - x*y*z - 2");
  CHECK(p.evaluate_exact({Rational(1, 2), 2, 3}) == Rational(1, 4) + 4 + 9 - 3 - 2);
}

TEST_CASE("phi: displayed quartic and reduction") {
  auto& V = vars_f3();
  Polynomial shown = P(V,
                       "x1*x2*x3*x123 + x12*x13*x23 - x1*x2*x12 - x1*x3*x13 - x2*x3*x23"
                       " - x1*x23*x123 - x2*x13*x123 - x3*x12*x123"
                       " + x1^2 + x2^2 + x3^2 + x12^2 + x13^2 + x23^2 + x123^2 - 4");
  CHECK(phi_f3() == shown);
  CHECK(reduce_mod_phi(phi_f3()).is_zero());
  Polynomial t = Polynomial::variable(V, "x123");
  // x123^2 = f_sigma x123 - f_pi
  CHECK(reduce_mod_phi(t * t) == f3_sum() * t - f3_product());
  Polynomial lin = P(V, "x123*x1 - 3*x2 + x13^5");
  CHECK(reduce_mod_phi(lin) == lin);
  CHECK(phi_f3().degree_in(6) == 2);
}

TEST_CASE("reduce_mod_phi kills multiples of phi") {
  Rng rng(8);
  auto& V = vars_f3();
  for (int t = 0; t < 25; ++t) {
    Polynomial p = random_poly(rng, V, 4, 3);
    Polynomial q = reduce_mod_phi(random_poly(rng, V, 5, 3));
    CHECK(q.degree_in(6) <= 1);
    CHECK(reduce_mod_phi(p * phi_f3() + q) == q);
  }
}
