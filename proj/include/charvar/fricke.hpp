// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "charvar/mat2.hpp"
#include "charvar/polyring.hpp"

namespace chv {

// --- three-holed sphere -------------------------------------------------------
enum class S03Verdict { MemberSlice, MemberOtherOctant, Nonmember };
struct S03Result {
  S03Verdict verdict;
  std::array<bool, 3> cusp{};  // |trace| = 2
  std::string json() const;
};
S03Result member_s03(double x, double y, double z);

// --- one-holed torus ----------------------------------------------------------
enum class S11Verdict { MemberSlice, MemberOrbit, Nonmember };
struct S11Result {
  S11Verdict verdict;
  double markov;    // x^2 + y^2 + z^2 - x y z
  bool cusp;        // kappa = -2 (parabolic boundary)
  std::string json() const;
};
S11Result member_s11(double x, double y, double z);

std::array<std::array<double, 3>, 4> h1z2_action(double x, double y, double z);

// --- cross-surfaces --------------------------------------------------------------
bool member_c02(double p, double q, double r);
bool member_c11(double p, double q, double r);

// --- four-holed sphere -------------------------------------------------------------
struct CharacterS04 {
  double a, b, c, d, x, y, z;
};
enum class S04Verdict { Member, NonmemberWrongComponent, NonmemberOffVariety, NonmemberRange };
struct S04Result {
  S04Verdict verdict;
  double residual;        // Phi_0 at the point
  double kappa_ab, kappa_cd;
  double s_minus, s_plus;
  double p, q;            // S_- = (2-x) P, S_+ = (2+x) Q... see fricke.cpp
  double f_plus, f_minus;
  std::array<bool, 4> cusp{};  // boundary trace = 2
  std::string json() const;
};
const Polynomial& s04_defining_polynomial();  // Phi_0 over {a,b,c,d,x,y,z}
S04Result member_s04(const CharacterS04& c, double tol = 1e-8);

// kappa_{p,q}(x) = x^2 + p^2 + q^2 - p q x - 4
double kappa_pq(double p, double q, double x);

// Exact residual of Phi_0 when every coordinate lies in Q(sqrt(D)):
// coordinate i = rat[i] + irr[i] sqrt(D). Returns (rational part, sqrt(D) part).
std::pair<Rational, Rational> s04_residual_exact(const std::array<Rational, 7>& rat,
                                                 const std::array<Rational, 7>& irr,
                                                 const Rational& D);

// --- two-holed torus -----------------------------------------------------------------
struct CharacterS12 {
  double a, b, u, v, w, x, y, z;
};
enum class S12Verdict { Member, NonmemberOffVariety, NonmemberInequalities };
struct S12Result {
  S12Verdict verdict;
  double sum_residual, product_residual;
  double kappa_xyz, kappa_yuw, kappa_uxv;
  bool a_parabolic, b_parabolic;
  std::string json() const;
};
// Relations over {a,b,u,v,w,x,y,z}
const Polynomial& s12_sum_relation();
const Polynomial& s12_product_relation();
S12Result member_s12(const CharacterS12& c, double tol = 1e-8);

// --- Fenchel-Nielsen on the one-holed torus -------------------------------------------
struct FNCoords {
  double l;    // > 0
  double tau;
  double b;    // >= 0
};
struct FNResult {
  double x, y, z;
  double kappa;
  Mat2C X, Y;
  // The printed closed form (y, z) with radicand 1 - 4 csch^2(l/2) sinh^2(b/4);
  // NaN where the radicand is negative.
  double printed_y, printed_z;
  double printed_discrepancy;
  std::string json() const;
};
FNResult fn_to_traces(const FNCoords& f);

long long pants_curve_count(int g, int n);

std::string to_string(S03Verdict v);
std::string to_string(S11Verdict v);
std::string to_string(S04Verdict v);
std::string to_string(S12Verdict v);

}  // namespace chv
