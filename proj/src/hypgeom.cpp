// SPDX-License-Identifier: Apache-2.0
#include "charvar/hypgeom.hpp"

#include <cmath>
#include <limits>

#include "charvar/chars.hpp"
#include "charvar/error.hpp"
#include "json.hpp"

namespace chv {

Mat2C point_to_involution(const PointH2& p) {
  if (!(p.u > 0)) throw MathError("point of H2 needs u > 0");
  return (1.0 / p.u) * Mat2C{p.x, -(p.x * p.x + p.u * p.u), 1, -p.x};
}

PointH2 involution_to_point(const Mat2C& a) {
  Mat2C b = a.c.real() > 0 ? a : -a;
  if (!(b.c.real() > 0)) throw MathError("not a point involution");
  return {b.a.real() / b.c.real(), 1 / b.c.real()};
}

Mat2C involution_fixing(cplx z1, std::optional<cplx> z2) {
  const cplx I(0, 1);
  if (!z2) return sign_normalize(I * Mat2C{-1, 2.0 * z1, 0, 1});
  if (std::abs(z1 - *z2) <= 1e-14) throw MathError("involution_fixing: z1 = z2");
  cplx s = z1 + *z2;
  return sign_normalize((I / (z1 - *z2)) * Mat2C{s, -2.0 * z1 * *z2, 2, -s});
}

double minkowski_inner(const Mat2C& a, const Mat2C& b) { return 0.5 * (a * b).trace().real(); }

std::string to_string(HalfPlaneRelation r) {
  switch (r) {
    case HalfPlaneRelation::CrossingOrAsymptotic: return "crossing-or-asymptotic";
    case HalfPlaneRelation::Nested: return "nested";
    case HalfPlaneRelation::DisjointOrComplementDisjoint: return "disjoint-or-complement-disjoint";
  }
  return "?";
}

HalfPlaneRelation half_plane_relation(const Mat2C& v1, const Mat2C& v2) {
  double ip = minkowski_inner(v1, v2);
  if (std::abs(ip) <= 1) return HalfPlaneRelation::CrossingOrAsymptotic;
  return ip > 1 ? HalfPlaneRelation::Nested : HalfPlaneRelation::DisjointOrComplementDisjoint;
}

Mat2C common_perpendicular(const Mat2C& xi, const Mat2C& eta) {
  return conjugating_involution(xi, eta);
}

CoxeterInvolutions coxeter_extension(const Mat2C& xi, const Mat2C& eta) {
  Mat2C zeta = eta.adjugate() * xi.adjugate();
  return {conjugating_involution(xi, eta), conjugating_involution(eta, zeta),
          conjugating_involution(zeta, xi)};
}

std::string to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::Central: return "central";
    case IsometryClass::Parabolic: return "parabolic";
    case IsometryClass::Elliptic: return "semisimple-elliptic";
    case IsometryClass::LoxodromicOrHyperbolic: return "semisimple-loxodromic-or-hyperbolic";
    case IsometryClass::Involution: return "involution";
  }
  return "?";
}

IsometryClass classify_isometry(const Mat2C& m) {
  Mat2C I = Mat2C::identity();
  if (max_abs_diff(m, I) <= 1e-10 || max_abs_diff(m, -I) <= 1e-10) return IsometryClass::Central;
  cplx t = m.trace();
  if (std::abs(t - 2.0) <= 1e-9 || std::abs(t + 2.0) <= 1e-9) return IsometryClass::Parabolic;
  if (std::abs(t) <= 1e-12) return IsometryClass::Involution;
  if (std::abs(t.imag()) <= 1e-12 && std::abs(t.real()) < 2) return IsometryClass::Elliptic;
  return IsometryClass::LoxodromicOrHyperbolic;
}

Mat3C bilinear_form_from_character(cplx x, cplx y, cplx z) {
  Mat3C B;
  B(0, 0) = B(1, 1) = B(2, 2) = 1;
  B(0, 1) = B(1, 0) = z / 2.0;
  B(0, 2) = B(2, 0) = y / 2.0;
  B(1, 2) = B(2, 1) = x / 2.0;
  return B;
}

std::array<Mat3C, 3> reflections_from_form(const Mat3C& B) {
  std::array<Mat3C, 3> R;
  for (int i = 0; i < 3; ++i) {
    R[i] = Mat3C::identity();
    for (int j = 0; j < 3; ++j) R[i](i, j) -= 2.0 * B(i, j);
  }
  return R;
}

std::string to_string(FormSignature s) {
  switch (s) {
    case FormSignature::PositiveDefinite: return "positive-definite";
    case FormSignature::Sig21: return "signature-2-1";
    case FormSignature::Sig12: return "signature-1-2";
    case FormSignature::DegenerateRank2: return "degenerate-rank2";
    case FormSignature::DegenerateRank1: return "degenerate-rank1";
    case FormSignature::Other: return "other";
  }
  return "?";
}

FormSignature form_signature(const Mat3C& Bc, double tol) {
  // Descartes' rule is exact for the real-rooted characteristic polynomial
  // of a symmetric matrix: positive roots = sign changes.
  double b[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = Bc(i, j).real();
  double c1 = b[0][0] + b[1][1] + b[2][2];
  double c2 = b[0][0] * b[1][1] - b[0][1] * b[1][0] + b[0][0] * b[2][2] - b[0][2] * b[2][0] +
              b[1][1] * b[2][2] - b[1][2] * b[2][1];
  double c3 = Bc.det().real();
  double scale = 1;
  for (auto& row : b)
    for (double v : row) scale = std::max(scale, std::abs(v));
  std::vector<double> co{1, -c1, c2, -c3};
  int zeros = 0;
  if (std::abs(c3) <= tol * scale * scale * scale) {
    ++zeros;
    if (std::abs(c2) <= tol * scale * scale) ++zeros;
  }
  co.resize(4 - zeros);
  int changes = 0;
  double prev = co[0];
  for (std::size_t i = 1; i < co.size(); ++i) {
    double thr = tol * std::pow(scale, double(i));
    if (std::abs(co[i]) <= thr) continue;
    if ((co[i] > 0) != (prev > 0)) ++changes;
    prev = co[i];
  }
  if (zeros == 1) return FormSignature::DegenerateRank2;
  if (zeros == 2) return FormSignature::DegenerateRank1;
  switch (changes) {
    case 3: return FormSignature::PositiveDefinite;
    case 2: return FormSignature::Sig21;
    case 1: return FormSignature::Sig12;
    default: return FormSignature::Other;
  }
}

std::string HexagonReport::json() const {
  nlohmann::json j;
  j["pairs"] = nlohmann::json::array();
  for (const auto& p : pairs) {
    nlohmann::json e{{"names", p.names}, {"status", p.status}};
    e["inner"] = p.inner ? nlohmann::json(*p.inner) : nlohmann::json(nullptr);
    e["formula"] = std::isnan(p.formula) ? nlohmann::json(nullptr) : nlohmann::json(p.formula);
    j["pairs"].push_back(e);
  }
  j["flipped"] = flipped;
  j["consistent"] = consistent;
  j["verdict"] = verdict ? "all-disjoint" : "fail";
  return j.dump();
}

namespace {

// Sign of <w, v2> for w the foot of the base point on the boundary of v1.
double side_of(const Mat2C& v1, const Mat2C& v2) {
  Mat2C p0 = point_to_involution({0, 1});
  double a = minkowski_inner(p0, v1);
  Mat2C w = (1.0 / std::sqrt(1 + a * a)) * (p0 - a * v1);
  return minkowski_inner(w, v2);
}

}  // namespace

HexagonReport hexagon_certificate(double x, double y, double z) {
  if (x > -2 || y > -2 || z > -2) throw UsageError("hexagon_certificate: traces must be <= -2");
  auto pr = real_normal_form(x, y, z);
  if (!pr) throw MathError("hexagon_certificate: no real pair");
  Mat2C X = pr->first, Y = pr->second, Z = (X * Y).adjugate();
  const double cusp = 1e-12;
  std::array<Mat2C, 3> M{X, Y, Z};
  std::array<double, 3> t{x, y, z};
  std::array<std::optional<Mat2C>, 3> H;
  for (int i = 0; i < 3; ++i)
    if (t[i] < -2 - cusp) H[i] = hat(M[i]);
  // pair (i,j) has product trace t[k]
  const int idx[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  const char* names[3] = {"XY", "YZ", "ZX"};
  HexagonReport rep;
  int disjoint = 0, complement = 0;
  std::array<double, 3> sides{};
  for (int p = 0; p < 3; ++p) {
    auto [i, j, k] = idx[p];
    HexagonPair hp;
    hp.names = names[p];
    if (H[i] && H[j]) {
      hp.inner = minkowski_inner(*H[i], *H[j]);
      hp.formula = (2 * t[k] - t[i] * t[j]) / std::sqrt((t[i] * t[i] - 4) * (t[j] * t[j] - 4));
      sides[p] = side_of(*H[i], *H[j]);
      (sides[p] < 0 ? disjoint : complement)++;
    } else {
      hp.formula = std::numeric_limits<double>::quiet_NaN();
      hp.status = "ideal";
    }
    rep.pairs.push_back(hp);
  }
  rep.consistent = disjoint == 0 || complement == 0;
  rep.flipped = complement > 0 && disjoint == 0;
  rep.verdict = rep.consistent;
  for (auto& hp : rep.pairs) {
    if (!hp.inner) continue;
    hp.status = *hp.inner < -1 ? "disjoint" : "fail";
    if (*hp.inner >= -1) rep.verdict = false;
  }
  return rep;
}

}  // namespace chv
