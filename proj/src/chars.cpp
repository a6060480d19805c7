// SPDX-License-Identifier: Apache-2.0
#include "charvar/chars.hpp"

#include <cmath>

#include "charvar/error.hpp"
#include "json.hpp"

namespace chv {

std::string to_string(RealCharClass c) {
  switch (c) {
    case RealCharClass::SU2FixedPoint: return "SU2-fixed-point";
    case RealCharClass::SL2RPlane: return "SL2R-plane";
    case RealCharClass::ReducibleCentral: return "Reducible-central";
    case RealCharClass::ReducibleSO2: return "Reducible-SO2";
    case RealCharClass::ReducibleSO11: return "Reducible-SO11";
    case RealCharClass::ReducibleParabolicFixed: return "Reducible-parabolic-fixed";
    case RealCharClass::ReducibleUndetermined: return "Reducible-undetermined";
  }
  return "?";
}

cplx kappa_value(cplx x, cplx y, cplx z) { return x * x + y * y + z * z - x * y * z - 2.0; }

Rational kappa_exact(const Rational& x, const Rational& y, const Rational& z) {
  return x * x + y * y + z * z - x * y * z - 2;
}

CharacterF2 character_of_pair(const Mat2C& xi, const Mat2C& eta) {
  return {xi.trace(), eta.trace(), (xi * eta).trace()};
}

CharacterF3 character_of_triple(const Mat2C& a, const Mat2C& b, const Mat2C& c) {
  return {a.trace(),         b.trace(),         c.trace(),
          (a * b).trace(),   (a * c).trace(),   (b * c).trace(),
          (a * b * c).trace(), (a * c * b).trace()};
}

bool is_irreducible(const CharacterF2& c, double tol) {
  return std::abs(kappa_value(c.x, c.y, c.z) - 2.0) > tol;
}

bool is_irreducible_exact(const Rational& x, const Rational& y, const Rational& z) {
  return kappa_exact(x, y, z) != 2;
}

namespace {

cplx det4(std::array<std::array<cplx, 4>, 4> m) {
  cplx d = 1;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (m[piv][col] == cplx(0)) return 0;
    if (piv != col) std::swap(m[piv], m[col]), d = -d;
    d *= m[col][col];
    for (int r = col + 1; r < 4; ++r) {
      cplx f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return d;
}

// Solve a 3x3 complex system by Cramer's rule.
std::array<cplx, 3> solve3(const std::array<std::array<cplx, 3>, 3>& A, const std::array<cplx, 3>& b) {
  auto det = [](const std::array<std::array<cplx, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  cplx D = det(A);
  if (std::abs(D) < 1e-300) throw MathError("singular Gram system");
  std::array<cplx, 3> x{};
  for (int k = 0; k < 3; ++k) {
    auto M = A;
    for (int r = 0; r < 3; ++r) M[r][k] = b[r];
    x[k] = det(M) / D;
  }
  return x;
}

bool plus_first(cplx a, cplx b) {
  double scale = 1 + std::abs(a) + std::abs(b);
  if (std::abs(a.real() - b.real()) > 1e-12 * scale) return a.real() > b.real();
  return a.imag() >= b.imag();
}

}  // namespace

IrreducibilityReport irreducibility_witnesses(const Mat2C& xi, const Mat2C& eta) {
  IrreducibilityReport r;
  auto c = character_of_pair(xi, eta);
  r.kappa = kappa_value(c.x, c.y, c.z);
  r.commutator_trace = (xi * eta * xi.adjugate() * eta.adjugate()).trace();
  r.det_lie = lie_product(xi, eta).det();
  Mat2C xe = xi * eta;
  std::array<std::array<cplx, 4>, 4> m{{Mat2C::identity().entries(), xi.entries(),
                                         eta.entries(), xe.entries()}};
  r.det_span = det4(m);
  const double tol = 1e-9;
  double scale = 1 + std::abs(r.kappa);
  r.irreducible = std::abs(r.kappa - 2.0) > tol;
  bool a = std::abs(r.commutator_trace - 2.0) > tol;
  bool b = std::abs(r.det_lie) > tol;
  bool d = std::abs(r.det_span) > tol;
  r.agree = a == r.irreducible && b == r.irreducible && d == r.irreducible &&
            std::abs(r.det_span - (2.0 - r.kappa)) <= 1e-9 * scale;
  return r;
}

RealCharClass classify_real_character(double x, double y, double z) {
  const double tol = 1e-9;
  double k = kappa_value(x, y, z).real();
  if (std::abs(k - 2) <= tol) {
    bool boundary = false, all_in = true, all_out = true;
    for (double t : {x, y, z}) {
      if (std::abs(std::abs(t) - 2) <= tol) boundary = true;
      if (std::abs(t) >= 2) all_in = false;
      if (std::abs(t) <= 2) all_out = false;
    }
    if (boundary) return RealCharClass::ReducibleUndetermined;
    if (all_in) return RealCharClass::ReducibleSO2;
    if (all_out) return RealCharClass::ReducibleSO11;
    return RealCharClass::ReducibleUndetermined;
  }
  bool cube = std::abs(x) <= 2 && std::abs(y) <= 2 && std::abs(z) <= 2;
  if (k < 2 && cube) return RealCharClass::SU2FixedPoint;
  return RealCharClass::SL2RPlane;
}

std::optional<std::pair<Mat2C, Mat2C>> real_normal_form(double x, double y, double z) {
  // Y = [[a,b],[c,d]]: c = x a + b - z, d = y - a, and
  // a^2 + (b x - y) a + b^2 - b z + 1 = 0.
  std::vector<double> cands{1, -1};
  if (std::abs(x * x - 4) > 1e-12) cands.push_back((x * y - 2 * z) / (x * x - 4));
  for (int k = 1; k <= 20; ++k) {
    double p = std::ldexp(1.0, k);
    cands.insert(cands.end(), {p, -p, 1 / p, -1 / p});
  }
  for (double b : cands) {
    double B = b * x - y, C = b * b - b * z + 1;
    double D = B * B - 4 * C;
    if (D < -1e-12 * (1 + B * B)) continue;
    double a = (-B + std::sqrt(std::max(D, 0.0))) / 2;
    Mat2C X{x, -1, 1, 0}, Y{a, b, x * a + b - z, y - a};
    if (std::abs(Y.det() - 1.0) > 1e-9) continue;
    return std::make_pair(X, Y);
  }
  return std::nullopt;
}

bool axes_cross(double x, double y, double z) {
  if (x == 0 && y == 0 && z == 0) throw MathError("axes_cross: the quaternion character is excluded");
  if (kappa_value(x, y, z).real() > -2 + 1e-12) throw MathError("axes_cross: requires kappa <= -2");
  auto p = real_normal_form(x, y, z);
  if (!p) throw MathError("axes_cross: no real pair");
  return lie_product(p->first, p->second).det().real() > 0;
}

Mat2C hermitian_form(double x, double y, double z) {
  if (std::abs(z) > 2) throw MathError("hermitian_form: needs |z| <= 2");
  double s = std::sqrt(std::max(0.0, 1 - z * z / 4));
  cplx off(-x * s, y - x * z / 2);
  return {2 * s, off, std::conj(off), 2 * s};
}

std::pair<cplx, cplx> triple_trace_roots(const SixTraces& s) {
  std::vector<cplx> v{s.t1, s.t2, s.t3, s.t12, s.t13, s.t23, 0};
  cplx S = f3_sum().evaluate(v), P = f3_product().evaluate(v);
  cplx r = std::sqrt(S * S - 4.0 * P);
  cplx l1 = (S + r) / 2.0, l2 = (S - r) / 2.0;
  return plus_first(l1, l2) ? std::make_pair(l1, l2) : std::make_pair(l2, l1);
}

std::array<Mat2C, 3> construct_triple(const SixTraces& s, Branch branch) {
  cplx k = kappa_value(s.t1, s.t2, s.t12);
  if (std::abs(k - 2.0) <= 1e-9) {
    // Reducible first pair: upper-triangular model.
    cplx a1 = (s.t1 + std::sqrt(s.t1 * s.t1 - 4.0)) / 2.0;
    cplx a2 = (s.t2 + std::sqrt(s.t2 * s.t2 - 4.0)) / 2.0;
    Mat2C x2{a2, s.t23 - a2 * s.t3, 0, 1.0 / a2};
    Mat2C x3{s.t3, -1, 1, 0};
    double both = std::abs(s.t12 - (a1 * a2 + 1.0 / (a1 * a2)));
    double mixed = std::abs(s.t12 - (a1 / a2 + a2 / a1));
    Mat2C x1 = both <= mixed ? Mat2C{a1, s.t13 - a1 * s.t3, 0, 1.0 / a1}
                             : Mat2C{1.0 / a1, s.t13 - s.t3 / a1, 0, a1};
    return {x1, x2, x3};
  }
  auto [x1, x2] = normal_form_pair(s.t1, s.t2, s.t12);
  // w0 = al I + be x1 + ga x2 with prescribed traces against I, x1, x2
  std::array<std::array<cplx, 3>, 3> G{{{2.0, s.t1, s.t2},
                                        {s.t1, s.t1 * s.t1 - 2.0, s.t12},
                                        {s.t2, s.t12, s.t2 * s.t2 - 2.0}}};
  auto c = solve3(G, {s.t3, s.t13, s.t23});
  Mat2C w0 = c[0] * Mat2C::identity() + c[1] * x1 + c[2] * x2;
  Mat2C L = lie_product(x1, x2);
  // L is trace-orthogonal to I, x1, x2, so det(w0 + s L) = det w0 + s^2 det L.
  cplx sv = std::sqrt((1.0 - w0.det()) / L.det());
  Mat2C wp = w0 + sv * L, wm = w0 - sv * L;
  auto roots = triple_trace_roots(s);
  cplx want = branch == Branch::Plus ? roots.first : roots.second;
  cplx tp = (x1 * x2 * wp).trace(), tm = (x1 * x2 * wm).trace();
  return {x1, x2, std::abs(tp - want) <= std::abs(tm - want) ? wp : wm};
}

std::string character_json(const CharacterF2& c) {
  nlohmann::json j{{"x", cplx_str(c.x)}, {"y", cplx_str(c.y)}, {"z", cplx_str(c.z)}};
  return j.dump();
}

std::string character_json(const CharacterF3& c) {
  nlohmann::json j{{"t1", cplx_str(c.t1)},     {"t2", cplx_str(c.t2)},
                   {"t3", cplx_str(c.t3)},     {"t12", cplx_str(c.t12)},
                   {"t13", cplx_str(c.t13)},   {"t23", cplx_str(c.t23)},
                   {"t123", cplx_str(c.t123)}, {"t132", cplx_str(c.t132)}};
  return j.dump();
}

}  // namespace chv
