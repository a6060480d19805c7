// SPDX-License-Identifier: Apache-2.0
#include "charvar/fricke.hpp"

#include <cmath>
#include <limits>

#include "charvar/chars.hpp"
#include "charvar/error.hpp"
#include "json.hpp"

namespace chv {

std::string to_string(S03Verdict v) {
  switch (v) {
    case S03Verdict::MemberSlice: return "member-slice";
    case S03Verdict::MemberOtherOctant: return "member-other-octant";
    case S03Verdict::Nonmember: return "nonmember";
  }
  return "?";
}
std::string to_string(S11Verdict v) {
  switch (v) {
    case S11Verdict::MemberSlice: return "member-slice";
    case S11Verdict::MemberOrbit: return "member-orbit";
    case S11Verdict::Nonmember: return "nonmember";
  }
  return "?";
}
std::string to_string(S04Verdict v) {
  switch (v) {
    case S04Verdict::Member: return "member";
    case S04Verdict::NonmemberWrongComponent: return "nonmember-wrong-component";
    case S04Verdict::NonmemberOffVariety: return "nonmember-off-variety";
    case S04Verdict::NonmemberRange: return "nonmember-range";
  }
  return "?";
}
std::string to_string(S12Verdict v) {
  switch (v) {
    case S12Verdict::Member: return "member";
    case S12Verdict::NonmemberOffVariety: return "nonmember-off-variety";
    case S12Verdict::NonmemberInequalities: return "nonmember-inequalities";
  }
  return "?";
}

namespace {
constexpr double kCusp = 1e-12;
nlohmann::json num(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }
}  // namespace

// --- three-holed sphere -------------------------------------------------------

std::string S03Result::json() const {
  return nlohmann::json{{"verdict", to_string(verdict)}, {"cusp", cusp}}.dump();
}

S03Result member_s03(double x, double y, double z) {
  S03Result r{S03Verdict::Nonmember, {}};
  std::array<double, 3> t{x, y, z};
  for (int i = 0; i < 3; ++i) r.cusp[i] = std::abs(std::abs(t[i]) - 2) <= kCusp;
  int low = 0, high = 0;
  for (double v : t) {
    if (v <= -2 + kCusp) ++low;
    else if (v >= 2 - kCusp) ++high;
  }
  if (low == 3) r.verdict = S03Verdict::MemberSlice;
  else if (low == 1 && high == 2) r.verdict = S03Verdict::MemberOtherOctant;
  if (r.verdict == S03Verdict::Nonmember) r.cusp = {};
  return r;
}

// --- one-holed torus ----------------------------------------------------------

std::string S11Result::json() const {
  return nlohmann::json{{"verdict", to_string(verdict)}, {"markov", markov}, {"cusp", cusp}}.dump();
}

S11Result member_s11(double x, double y, double z) {
  double m = x * x + y * y + z * z - x * y * z;
  double tol = kCusp * (1 + std::abs(x * y * z));
  S11Result r{S11Verdict::Nonmember, m, false};
  if (m <= tol) {
    r.cusp = std::abs(m) <= tol;
    r.verdict = (x > 2 && y > 2 && z > 2) ? S11Verdict::MemberSlice : S11Verdict::MemberOrbit;
  }
  return r;
}

std::array<std::array<double, 3>, 4> h1z2_action(double x, double y, double z) {
  return {{{x, y, z}, {x, -y, -z}, {-x, y, -z}, {-x, -y, z}}};
}

bool member_c02(double p, double q, double r) { return r <= -2 && p * q + r >= 2; }

bool member_c11(double p, double q, double r) { return p * p + q * q - p * q * r >= 0; }

// --- four-holed sphere -------------------------------------------------------------

const Polynomial& s04_defining_polynomial() {
  static const Polynomial p = Polynomial::parse(
      vars_s04(),
      "x^2 + y^2 + z^2 + x*y*z - (a*b + c*d)*x - (a*d + b*c)*y - (a*c + b*d)*z"
      " + a^2 + b^2 + c^2 + d^2 + a*b*c*d - 4");
  return p;
}

double kappa_pq(double p, double q, double x) { return x * x + p * p + q * q - p * q * x - 4; }

std::string S04Result::json() const {
  return nlohmann::json{{"verdict", to_string(verdict)}, {"residual", num(residual)},
                        {"kappa_ab", num(kappa_ab)},     {"kappa_cd", num(kappa_cd)},
                        {"S_minus", num(s_minus)},       {"S_plus", num(s_plus)},
                        {"P", num(p)},                   {"Q", num(q)},
                        {"F_plus", num(f_plus)},         {"F_minus", num(f_minus)},
                        {"cusp", cusp}}
      .dump();
}

// With al = -2 - x > 0, be = 2 - x > 0:
//   S_- = (y - z)(2 - x) + (a - b)(c - d) = be * P
//   S_+ = (y + z)(2 + x) - (a + b)(c + d) = -al * Q
// and on the variety al Q^2 - be P^2 = 4 kappa_ab kappa_cd / (x^2 - 4). The
// factors F~(+/-) = sqrt(al) Q +/- sqrt(be) P share a sign there; the
// Fricke component is the one where both are negative.
S04Result member_s04(const CharacterS04& c, double tol) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  S04Result r{S04Verdict::NonmemberRange, nan, nan, nan, nan, nan, nan, nan, nan, nan, {}};
  std::array<double, 4> bd{c.a, c.b, c.c, c.d};
  for (int i = 0; i < 4; ++i) r.cusp[i] = std::abs(bd[i] - 2) <= kCusp;
  std::vector<cplx> v{c.a, c.b, c.c, c.d, c.x, c.y, c.z};
  r.residual = s04_defining_polynomial().evaluate(v).real();
  r.kappa_ab = kappa_pq(c.a, c.b, c.x);
  r.kappa_cd = kappa_pq(c.c, c.d, c.x);
  r.s_minus = (c.y - c.z) * (2 - c.x) + (c.a - c.b) * (c.c - c.d);
  r.s_plus = (c.y + c.z) * (2 + c.x) - (c.a + c.b) * (c.c + c.d);
  for (double t : bd)
    if (t < 2 - kCusp) return r;
  if (!(c.x < -2)) return r;
  double al = -2 - c.x, be = 2 - c.x;
  r.p = r.s_minus / be;
  r.q = -r.s_plus / al;
  r.f_plus = std::sqrt(al) * r.q + std::sqrt(be) * r.p;
  r.f_minus = std::sqrt(al) * r.q - std::sqrt(be) * r.p;
  double scale = 1 + s04_defining_polynomial().magnitude(v);
  if (std::abs(r.residual) > tol * scale) {
    r.verdict = S04Verdict::NonmemberOffVariety;
    return r;
  }
  r.verdict = (r.f_plus < 0 && r.f_minus < 0) ? S04Verdict::Member
                                              : S04Verdict::NonmemberWrongComponent;
  return r;
}

namespace {
struct Surd {  // a + b sqrt(D)
  Rational a, b;
};
}  // namespace

std::pair<Rational, Rational> s04_residual_exact(const std::array<Rational, 7>& rat,
                                                 const std::array<Rational, 7>& irr,
                                                 const Rational& D) {
  auto mul = [&](const Surd& p, const Surd& q) {
    return Surd{p.a * q.a + D * p.b * q.b, p.a * q.b + p.b * q.a};
  };
  Surd total{0, 0};
  for (const auto& [e, coef] : s04_defining_polynomial().terms()) {
    Surd m{coef, 0};
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) m = mul(m, Surd{rat[i], irr[i]});
    total.a += m.a;
    total.b += m.b;
  }
  return {total.a, total.b};
}

// --- two-holed torus -----------------------------------------------------------------

const Polynomial& s12_sum_relation() {
  static const Polynomial p =
      Polynomial::parse(vars_s12(), "a + b - (y*v + x*w + z*u - u*x*y)");
  return p;
}

const Polynomial& s12_product_relation() {
  static const Polynomial p = Polynomial::parse(
      vars_s12(),
      "a*b - (x^2 + y^2 + u^2 + v^2 + w^2 + z^2 - x*y*z - y*u*w - u*x*v + v*w*z - 4)");
  return p;
}

std::string S12Result::json() const {
  return nlohmann::json{{"verdict", to_string(verdict)},
                        {"sum_residual", sum_residual},
                        {"product_residual", product_residual},
                        {"kappa_xyz", kappa_xyz},
                        {"kappa_yuw", kappa_yuw},
                        {"kappa_uxv", kappa_uxv},
                        {"a_parabolic", a_parabolic},
                        {"b_parabolic", b_parabolic}}
      .dump();
}

S12Result member_s12(const CharacterS12& c, double tol) {
  std::vector<cplx> v{c.a, c.b, c.u, c.v, c.w, c.x, c.y, c.z};
  S12Result r;
  r.sum_residual = std::abs(s12_sum_relation().evaluate(v));
  r.product_residual = std::abs(s12_product_relation().evaluate(v));
  r.kappa_xyz = kappa_value(c.x, c.y, c.z).real();
  r.kappa_yuw = kappa_value(c.y, c.u, c.w).real();
  r.kappa_uxv = kappa_value(c.u, c.x, c.v).real();
  r.a_parabolic = std::abs(c.a - 2) <= 1e-9;
  r.b_parabolic = std::abs(c.b - 2) <= 1e-9;
  if (r.sum_residual > tol * (1 + s12_sum_relation().magnitude(v)) ||
      r.product_residual > tol * (1 + s12_product_relation().magnitude(v))) {
    r.verdict = S12Verdict::NonmemberOffVariety;
  } else if (r.kappa_xyz < -2 && r.kappa_yuw < -2 && r.kappa_uxv < -2) {
    r.verdict = S12Verdict::Member;
  } else {
    r.verdict = S12Verdict::NonmemberInequalities;
  }
  return r;
}

// --- Fenchel-Nielsen ------------------------------------------------------------------

std::string FNResult::json() const {
  return nlohmann::json{{"x", x},
                        {"y", y},
                        {"z", z},
                        {"kappa", kappa},
                        {"X", nlohmann::json::parse(mat_json(X))},
                        {"Y", nlohmann::json::parse(mat_json(Y))},
                        {"printed_closed_form", {{"y", num(printed_y)}, {"z", num(printed_z)}}},
                        {"printed_closed_form_discrepancy", num(printed_discrepancy)}}
      .dump();
}

FNResult fn_to_traces(const FNCoords& f) {
  if (!(f.l > 0)) throw UsageError("fn_to_traces: l must be > 0");
  if (!(f.b >= 0)) throw UsageError("fn_to_traces: b must be >= 0");
  // kappa = 2 - 4 sinh^2(l/2) sinh^2(mu/2) = -2 cosh(b/2)
  double sh_half_mu = std::cosh(f.b / 4) / std::sinh(f.l / 2);
  double half_mu = std::asinh(sh_half_mu);
  FNResult r;
  r.X = Mat2C::diag(std::exp(f.l / 2), std::exp(-f.l / 2));
  Mat2C Y0{std::cosh(half_mu), std::sinh(half_mu), std::sinh(half_mu), std::cosh(half_mu)};
  r.Y = Y0 * Mat2C::diag(std::exp(f.tau / 2), std::exp(-f.tau / 2));
  r.x = r.X.trace().real();
  r.y = r.Y.trace().real();
  r.z = (r.X * r.Y).trace().real();
  r.kappa = kappa_value(r.x, r.y, r.z).real();
  double sl = std::sinh(f.l / 2), sb = std::sinh(f.b / 4);
  double rad = 1 - 4 * sb * sb / (sl * sl);
  if (rad >= 0) {
    r.printed_y = 2 * std::sqrt(rad) * std::cosh(f.tau / 2);
    r.printed_z = 2 * std::sqrt(rad) * std::cosh((f.tau + f.l) / 2);
    r.printed_discrepancy = std::max(std::abs(r.printed_y - r.y), std::abs(r.printed_z - r.z));
  } else {
    r.printed_y = r.printed_z = r.printed_discrepancy = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

long long pants_curve_count(int g, int n) {
  if (g < 0 || n < 0) throw UsageError("pants_curve_count: negative input");
  return 3LL * (g - 1) + n;
}

}  // namespace chv
