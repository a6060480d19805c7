// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>

#include "charvar/chars.hpp"
#include "charvar/error.hpp"
#include "charvar/rng.hpp"
#include "charvar/tracepoly.hpp"

using namespace chv;

TEST_CASE("character of pair round trips") {
  auto [a, b] = normal_form_pair(1, 2, 3);
  auto c = character_of_pair(a, b);
  CHECK(std::abs(c.x - 1.0) + std::abs(c.y - 2.0) + std::abs(c.z - 3.0) < 1e-12);
  auto t = character_of_pair(Mat2C::identity(), Mat2C::identity());
  CHECK(t.x == cplx(2));
  CHECK(t.z == cplx(2));
  Rng rng(31);
  for (int k = 0; k < 200; ++k) {
    cplx x = rng.complex_box(3), y = rng.complex_box(3), z = rng.complex_box(3);
    auto [p, q] = normal_form_pair(x, y, z);
    auto r = character_of_pair(p, q);
    CHECK(std::abs(r.x - x) + std::abs(r.y - y) + std::abs(r.z - z) < 1e-10);
    // conjugate pairs have equal characters
    Mat2C g = rng.unimodular();
    auto s = character_of_pair(g * p * g.adjugate(), g * q * g.adjugate());
    CHECK(std::abs(s.x - x) + std::abs(s.y - y) + std::abs(s.z - z) < 1e-9 * (1 + std::norm(g.a) + std::norm(g.d)) * 10);
  }
}

TEST_CASE("equal characters give equal trace values") {
  Rng rng(32);
  for (int k = 0; k < 20; ++k) {
    Mat2C a = rng.unimodular(), b = rng.unimodular();
    auto c = character_of_pair(a, b);
    auto [p, q] = normal_form_pair(c.x, c.y, c.z);
    for (int j = 0; j < 20; ++j) {
      Word w = rng.word(2, 10);
      cplx u = evaluate_word(w, {a, b}).trace(), v = evaluate_word(w, {p, q}).trace();
      CHECK(std::abs(u - v) < 1e-7 * (1 + std::abs(u)));
    }
  }
}

TEST_CASE("irreducibility") {
  CHECK_FALSE(is_irreducible({2, 2, 2}));
  CHECK(is_irreducible({0, 0, 0}));
  CHECK_FALSE(is_irreducible_exact(2, 2, 2));
  CHECK(is_irreducible_exact(Rational(1, 2), 0, 0));
  auto up = irreducibility_witnesses(Mat2C{2, 1, 0, 0.5}, Mat2C{3, -1, 0, 1.0 / 3});
  CHECK_FALSE(up.irreducible);
  CHECK(up.agree);
  Rng rng(33);
  for (int k = 0; k < 100; ++k) {
    auto r = irreducibility_witnesses(rng.unimodular(), rng.unimodular());
    CHECK(r.agree);
    CHECK(r.irreducible);
    CHECK(std::abs(r.det_span - (2.0 - r.kappa)) < 1e-9 * (1 + std::abs(r.kappa)));
  }
}

TEST_CASE("real character classes") {
  CHECK(classify_real_character(1, 1, 1) == RealCharClass::SU2FixedPoint);
  CHECK(classify_real_character(3, 3, 3) == RealCharClass::SL2RPlane);
  CHECK(classify_real_character(0, 0, 0) == RealCharClass::SU2FixedPoint);
  CHECK(classify_real_character(-3, -3, -3) == RealCharClass::SL2RPlane);
  // reducible: diag(e^{it}) pairs have kappa = 2
  double s = 2 * std::cos(0.3), t = 2 * std::cos(0.5), u = 2 * std::cos(0.8);
  CHECK(classify_real_character(s, t, u) == RealCharClass::ReducibleSO2);
  double p = 2 * std::cosh(0.3), q = 2 * std::cosh(0.5), r = 2 * std::cosh(0.8);
  CHECK(classify_real_character(p, q, r) == RealCharClass::ReducibleSO11);
  CHECK(classify_real_character(2, 2, 2) == RealCharClass::ReducibleUndetermined);
  CHECK(to_string(RealCharClass::SL2RPlane) == "SL2R-plane");
}

TEST_CASE("real normal form") {
  for (auto v : std::vector<std::array<double, 3>>{{3, 3, 3}, {-3, -3, -3}, {5, 5, 5}, {2.5, -7, 0.5},
                                                   {-10, -3, -3}, {-2, -2, -2}, {3, 3, 10}}) {
    auto pr = real_normal_form(v[0], v[1], v[2]);
    REQUIRE(pr.has_value());
    auto [X, Y] = *pr;
    CHECK(X.is_real());
    CHECK(Y.is_real());
    CHECK(std::abs(Y.det() - 1.0) < 1e-9);
    CHECK(std::abs(X.trace().real() - v[0]) < 1e-12);
    CHECK(std::abs(Y.trace().real() - v[1]) < 1e-9);
    CHECK(std::abs((X * Y).trace().real() - v[2]) < 1e-9);
  }
  CHECK_FALSE(real_normal_form(1, 1, 1).has_value());
}

TEST_CASE("axes cross") {
  CHECK(axes_cross(3, 3, 3));
  CHECK(axes_cross(5, 5, 5));
  CHECK(axes_cross(-3, -3, 3));
  CHECK_THROWS_AS(axes_cross(0, 0, 0), MathError);
  CHECK_THROWS_AS(axes_cross(3, 3, 10), MathError);
}

TEST_CASE("SU(2) characters carry a definite invariant Hermitian form") {
  Rng rng(34);
  int n = 0;
  while (n < 100) {
    double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2), z = rng.uniform(-2, 2);
    if (classify_real_character(x, y, z) != RealCharClass::SU2FixedPoint) continue;
    ++n;
    Mat2C H = hermitian_form(x, y, z);
    double k = kappa_value(x, y, z).real();
    CHECK(std::abs(H.det().real() - (2 - k)) < 1e-12);
    CHECK(H.det().real() > 0);
    CHECK(H.a.real() > 0);
    auto [a, b] = normal_form_pair(x, y, z);
    CHECK(max_abs_diff(a.adjoint() * H * a, H) < 1e-9);
    CHECK(max_abs_diff(b.adjoint() * H * b, H) < 1e-9);
  }
}

TEST_CASE("triple trace roots") {
  auto [p, m] = triple_trace_roots({2, 2, 2, 2, 2, 2});
  CHECK(std::abs(p - 2.0) < 1e-12);
  CHECK(std::abs(m - 2.0) < 1e-12);
  Rng rng(35);
  for (int k = 0; k < 100; ++k) {
    Mat2C a = rng.unimodular(), b = rng.unimodular(), c = rng.unimodular();
    auto ch = character_of_triple(a, b, c);
    auto [l1, l2] = triple_trace_roots({ch.t1, ch.t2, ch.t3, ch.t12, ch.t13, ch.t23});
    CHECK((l1.real() > l2.real() || (l1.real() == l2.real() && l1.imag() >= l2.imag())));
    double sc = 1 + std::abs(ch.t123) + std::abs(ch.t132);
    double e1 = std::abs(ch.t123 - l1) + std::abs(ch.t132 - l2);
    double e2 = std::abs(ch.t123 - l2) + std::abs(ch.t132 - l1);
    CHECK(std::min(e1, e2) < 1e-8 * sc);
  }
}

TEST_CASE("construct triple") {
  auto tr = construct_triple({2, 2, 2, 2, 2, 2}, Branch::Plus);
  auto c0 = character_of_triple(tr[0], tr[1], tr[2]);
  for (cplx v : {c0.t1, c0.t2, c0.t3, c0.t12, c0.t13, c0.t23, c0.t123, c0.t132})
    CHECK(std::abs(v - 2.0) < 1e-12);

  auto red = construct_triple({2, 2, 5, 2, 7, 7}, Branch::Plus);
  auto cr = character_of_triple(red[0], red[1], red[2]);
  CHECK(std::abs(cr.t3 - 5.0) + std::abs(cr.t13 - 7.0) + std::abs(cr.t23 - 7.0) +
            std::abs(cr.t12 - 2.0) < 1e-12);

  // reducible, mixed sign case: t12 = a1/a2 + a2/a1
  cplx a1 = 3, a2 = cplx(0.5, 1);
  SixTraces mixed{a1 + 1.0 / a1, a2 + 1.0 / a2, 1.5, a1 / a2 + a2 / a1, cplx(0.2, 1), -4};
  auto mt = construct_triple(mixed, Branch::Minus);
  auto cm = character_of_triple(mt[0], mt[1], mt[2]);
  CHECK(std::abs(cm.t12 - mixed.t12) + std::abs(cm.t13 - mixed.t13) + std::abs(cm.t23 - mixed.t23) < 1e-12);

  Rng rng(36);
  for (int k = 0; k < 200; ++k) {
    SixTraces s{rng.complex_box(3), rng.complex_box(3), rng.complex_box(3),
                rng.complex_box(3), rng.complex_box(3), rng.complex_box(3)};
    auto roots = triple_trace_roots(s);
    for (Branch br : {Branch::Plus, Branch::Minus}) {
      auto m = construct_triple(s, br);
      for (const auto& g : m) CHECK(std::abs(g.det() - 1.0) < 1e-8);
      auto c = character_of_triple(m[0], m[1], m[2]);
      double err = std::abs(c.t1 - s.t1) + std::abs(c.t2 - s.t2) + std::abs(c.t3 - s.t3) +
                   std::abs(c.t12 - s.t12) + std::abs(c.t13 - s.t13) + std::abs(c.t23 - s.t23);
      CHECK(err < 1e-8);
      cplx want = br == Branch::Plus ? roots.first : roots.second;
      CHECK(std::abs(c.t123 - want) < 1e-8 * (1 + std::abs(want)));
      CHECK(std::abs(phi_polynomial().evaluate(c.seven())) < 1e-7 * (1 + std::pow(std::abs(want), 2)));
    }
  }
}

TEST_CASE("character of triple satisfies the relations") {
  Rng rng(37);
  auto [fs, fp] = sum_product_relation_polys();
  for (int k = 0; k < 100; ++k) {
    auto c = character_of_triple(rng.unimodular(), rng.unimodular(), rng.unimodular());
    auto v = c.seven();
    double sc = 1;
    for (cplx q : v) sc = std::max(sc, std::abs(q));
    CHECK(std::abs(fs.evaluate(v) - c.t123 - c.t132) < 1e-9 * sc * sc * sc);
    CHECK(std::abs(fp.evaluate(v) - c.t123 * c.t132) < 1e-9 * std::pow(sc, 4));
  }
}
