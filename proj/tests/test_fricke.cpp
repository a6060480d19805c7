// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cfloat>
#include <cmath>

#include "charvar/chars.hpp"
#include "charvar/error.hpp"
#include "charvar/fricke.hpp"
#include "charvar/hypgeom.hpp"
#include "charvar/rng.hpp"

using namespace chv;

TEST_CASE("three-holed sphere") {
  auto a = member_s03(-3, -3, -3);
  CHECK(a.verdict == S03Verdict::MemberSlice);
  CHECK_FALSE(a.cusp[0]);
  auto b = member_s03(-2, -2, -2);
  CHECK(b.verdict == S03Verdict::MemberSlice);
  CHECK((b.cusp[0] && b.cusp[1] && b.cusp[2]));
  CHECK(member_s03(-3, 3, 3).verdict == S03Verdict::MemberOtherOctant);
  CHECK(member_s03(3, -3, 3).verdict == S03Verdict::MemberOtherOctant);
  CHECK(member_s03(3, 3, -3).verdict == S03Verdict::MemberOtherOctant);
  CHECK(member_s03(3, 3, 3).verdict == S03Verdict::Nonmember);
  CHECK(member_s03(-3, -3, 0).verdict == S03Verdict::Nonmember);
}

TEST_CASE("one-holed torus") {
  auto a = member_s11(3, 3, 3);
  CHECK(a.verdict == S11Verdict::MemberSlice);
  CHECK(a.cusp);
  CHECK(member_s11(5, 5, 5).verdict == S11Verdict::MemberSlice);
  CHECK(member_s11(5, 5, 5).markov == doctest::Approx(-50));
  CHECK(member_s11(3, 3, 10).verdict == S11Verdict::Nonmember);
  CHECK(member_s11(0, 0, 0).verdict == S11Verdict::MemberOrbit);
  CHECK(member_s11(-5, -5, 5).verdict == S11Verdict::MemberOrbit);
}

TEST_CASE("sign action") {
  auto v = h1z2_action(1, 2, 3);
  CHECK(v[0] == std::array<double, 3>{1, 2, 3});
  CHECK(v[1] == std::array<double, 3>{1, -2, -3});
  CHECK(v[2] == std::array<double, 3>{-1, 2, -3});
  CHECK(v[3] == std::array<double, 3>{-1, -2, 3});
  Rng rng(51);
  for (int k = 0; k < 300; ++k) {
    double x = rng.uniform(-8, 8), y = rng.uniform(-8, 8), z = rng.uniform(-8, 8);
    double k0 = kappa_value(x, y, z).real();
    bool orbit = member_s11(x, y, z).verdict != S11Verdict::Nonmember;
    for (const auto& t : h1z2_action(x, y, z)) {
      CHECK(kappa_value(t[0], t[1], t[2]).real() == doctest::Approx(k0));
      CHECK((member_s11(t[0], t[1], t[2]).verdict != S11Verdict::Nonmember) == orbit);
    }
  }
}

TEST_CASE("slice points of the three-holed sphere give hexagons") {
  Rng rng(52);
  for (int k = 0; k < 50; ++k) {
    double x = rng.uniform(-9, -2.05), y = rng.uniform(-9, -2.05), z = rng.uniform(-9, -2.05);
    REQUIRE(member_s03(x, y, z).verdict == S03Verdict::MemberSlice);
    auto h = hexagon_certificate(x, y, z);
    for (const auto& p : h.pairs) CHECK(*p.inner < -1);
  }
}

TEST_CASE("cross-surfaces") {
  CHECK(member_c02(2, 2, -2));
  CHECK_FALSE(member_c02(0, 0, -2));
  CHECK(member_c02(3, 3, -3));
  CHECK_FALSE(member_c02(3, 3, -1));
  CHECK(member_c11(1, 1, 0));
  CHECK_FALSE(member_c11(1, 1, 3));
  CHECK(member_c11(0, 0, 0));
}

TEST_CASE("four-holed sphere: exact identity") {
  const auto& V = vars_s04();
  Polynomial phi0 = s04_defining_polynomial();
  Polynomial sm = Polynomial::parse(V, "(y - z)*(2 - x) + (a - b)*(c - d)");
  Polynomial sp = Polynomial::parse(V, "(y + z)*(2 + x) - (a + b)*(c + d)");
  Polynomial kab = Polynomial::parse(V, "x^2 + a^2 + b^2 - a*b*x - 4");
  Polynomial kcd = Polynomial::parse(V, "x^2 + c^2 + d^2 - c*d*x - 4");
  Polynomial lhs = Polynomial::parse(V, "4*(4 - x^2)") * phi0;
  Polynomial rhs = Polynomial::parse(V, "2 + x") * sm * sm + Polynomial::parse(V, "2 - x") * sp * sp -
                   Rational(4) * kab * kcd;
  CHECK(lhs == rhs);
  // The defining polynomial is the F3 hypersurface after renaming.
  CHECK(kappa_pq(3, 3, -3) == doctest::Approx(9 + 9 + 9 + 27 - 4));
}

TEST_CASE("four-holed sphere: witnesses") {
  auto w = member_s04({2, 2, 2, 2, -3, 2, 7});
  CHECK(w.verdict == S04Verdict::NonmemberWrongComponent);
  CHECK(std::abs(w.residual) < 1e-12);
  double t = -18 - 10 * std::sqrt(5.0);
  auto m = member_s04({3, 3, 3, 3, -3, t, t});
  CHECK(m.verdict == S04Verdict::Member);
  CHECK(std::abs(m.residual) <= 1e-10 * (1 + s04_defining_polynomial().magnitude(
                                                   std::vector<cplx>{3, 3, 3, 3, -3, t, t})));
  CHECK(std::abs(m.f_plus * m.f_minus - 4 * m.kappa_ab * m.kappa_cd / (9 - 4)) < 1e-8 * (1 + std::abs(m.f_plus * m.f_minus)));
  CHECK(member_s04({3, 3, 3, 3, -3, 0, 0}).verdict == S04Verdict::NonmemberOffVariety);
  CHECK(member_s04({1, 3, 3, 3, -3, 0, 0}).verdict == S04Verdict::NonmemberRange);
  CHECK(member_s04({3, 3, 3, 3, -1, 0, 0}).verdict == S04Verdict::NonmemberRange);
  // exact: coordinates in Q(sqrt 5)
  std::array<Rational, 7> rat{3, 3, 3, 3, -3, -18, -18}, irr{0, 0, 0, 0, 0, -10, -10};
  auto [r0, r1] = s04_residual_exact(rat, irr, 5);
  CHECK(r0 == 0);
  CHECK(r1 == 0);
  auto [q0, q1] = s04_residual_exact({3, 3, 3, 3, -3, 0, 0}, {0, 0, 0, 0, 0, 0, 0}, 5);
  CHECK(q0 != 0);
  CHECK(q1 == 0);
}

TEST_CASE("four-holed sphere: on-variety points from the real normal form") {
  // Points with the Euler-class-zero pattern a=b=c=d=2, y=2, z=4-x sit on the
  // non-Fricke component for every x < -2.
  for (double x : {-2.5, -3.0, -7.0}) {
    auto r = member_s04({2, 2, 2, 2, x, 2, 4 - x});
    CHECK(std::abs(r.residual) < 1e-9);
    CHECK(r.verdict == S04Verdict::NonmemberWrongComponent);
  }
}

TEST_CASE("two-holed torus") {
  Rng rng(53);
  int found = 0;
  for (int k = 0; k < 200000 && found < 20; ++k) {
    Mat2C U = rng.real_unimodular(), X = rng.real_unimodular(), Y = rng.real_unimodular();
    auto c = character_of_triple(U, X, Y);
    CharacterS12 s{c.t123.real(), c.t132.real(), c.t1.real(), c.t12.real(), c.t13.real(),
                   c.t2.real(), c.t3.real(), c.t23.real()};
    if (!(kappa_value(s.x, s.y, s.z).real() < -2 && kappa_value(s.y, s.u, s.w).real() < -2 &&
          kappa_value(s.u, s.x, s.v).real() < -2))
      continue;
    ++found;
    auto r = member_s12(s);
    CHECK(r.verdict == S12Verdict::Member);
    CHECK(r.sum_residual < 1e-9);
    CharacterS12 off = s;
    off.a += 0.5;
    CHECK(member_s12(off).verdict == S12Verdict::NonmemberOffVariety);
  }
  CHECK(found == 20);
  // a random representation generally violates the inequalities
  Mat2C U{1, 0.5, 0, 1}, X{2, 0, 0, 0.5}, Y{1, 0, 0.3, 1};
  auto c = character_of_triple(U, X, Y);
  CharacterS12 s{c.t123.real(), c.t132.real(), c.t1.real(), c.t12.real(), c.t13.real(),
                 c.t2.real(), c.t3.real(), c.t23.real()};
  CHECK(member_s12(s).verdict == S12Verdict::NonmemberInequalities);
}

TEST_CASE("Fenchel-Nielsen coordinates") {
  double l0 = 2 * std::acosh(1.5);
  auto base = fn_to_traces({l0, 0, 0});
  CHECK(base.x == doctest::Approx(3).epsilon(1e-14));
  CHECK(std::abs(base.kappa + 2) < 1e-9);
  CHECK_THROWS_AS(fn_to_traces({0, 0, 0}), UsageError);
  CHECK_THROWS_AS(fn_to_traces({1, 0, -1}), UsageError);
  Rng rng(54);
  int disagreements = 0;
  for (int k = 0; k < 100; ++k) {
    FNCoords f{rng.uniform(0.1, 5), rng.uniform(-3, 3), rng.uniform(0, 4)};
    auto r = fn_to_traces(f);
    CHECK(std::abs(r.kappa + 2 * std::cosh(f.b / 2)) < 1e-9 * (1 + std::abs(r.kappa)));
    CHECK(std::abs(r.x - 2 * std::cosh(f.l / 2)) <= 4 * DBL_EPSILON * r.x);
    CHECK(member_s11(r.x, r.y, r.z).verdict == S11Verdict::MemberSlice);
    CHECK(std::abs(r.X.det() - 1.0) < 1e-12);
    CHECK(std::abs(r.Y.det() - 1.0) < 1e-9);
    if (!(r.printed_discrepancy < 1e-6)) ++disagreements;
    // shifting the twist by l moves the Y trace to the XY trace
    auto s = fn_to_traces({f.l, f.tau + f.l, f.b});
    CHECK(s.y == doctest::Approx(r.z).epsilon(1e-9));
  }
  // the printed closed form does not reproduce the matrix traces
  CHECK(disagreements > 0);
}

TEST_CASE("pants curve count") {
  CHECK(pants_curve_count(1, 1) == 1);
  CHECK(pants_curve_count(0, 4) == 1);
  CHECK(pants_curve_count(2, 0) == 3);
  CHECK(pants_curve_count(0, 3) == 0);
  CHECK_THROWS_AS(pants_curve_count(-1, 2), UsageError);
}
