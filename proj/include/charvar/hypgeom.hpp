// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "charvar/mat2.hpp"

namespace chv {

struct PointH2 {
  double x = 0;
  double u = 1;  // > 0
};

Mat2C point_to_involution(const PointH2& p);
PointH2 involution_to_point(const Mat2C& a);  // branch A21 > 0

// z2 may be infinite: pass std::nullopt.
Mat2C involution_fixing(cplx z1, std::optional<cplx> z2);

double minkowski_inner(const Mat2C& a, const Mat2C& b);

enum class HalfPlaneRelation { CrossingOrAsymptotic, Nested, DisjointOrComplementDisjoint };
std::string to_string(HalfPlaneRelation r);
HalfPlaneRelation half_plane_relation(const Mat2C& v1, const Mat2C& v2);

Mat2C common_perpendicular(const Mat2C& xi, const Mat2C& eta);

struct CoxeterInvolutions {
  Mat2C xy, yz, zx;
};
// iota_ZX iota_XY = +/- xi, iota_XY iota_YZ = +/- eta, iota_YZ iota_ZX = +/- zeta,
// zeta = eta^-1 xi^-1.
CoxeterInvolutions coxeter_extension(const Mat2C& xi, const Mat2C& eta);

enum class IsometryClass { Central, Parabolic, Elliptic, LoxodromicOrHyperbolic, Involution };
std::string to_string(IsometryClass c);
IsometryClass classify_isometry(const Mat2C& m);

// [[1, z/2, y/2], [z/2, 1, x/2], [y/2, x/2, 1]]
Mat3C bilinear_form_from_character(cplx x, cplx y, cplx z);
std::array<Mat3C, 3> reflections_from_form(const Mat3C& B);

enum class FormSignature { PositiveDefinite, Sig21, Sig12, DegenerateRank2, DegenerateRank1, Other };
std::string to_string(FormSignature s);
FormSignature form_signature(const Mat3C& B, double tol = 1e-10);

struct HexagonPair {
  std::string names;              // "XY", "YZ", "ZX"
  std::optional<double> inner;    // empty when a cusp is involved
  double formula = 0;             // (2c - ab)/sqrt((a^2-4)(b^2-4)), NaN at cusps
  std::string status;             // "disjoint" | "ideal" | "fail"
};

struct HexagonReport {
  std::vector<HexagonPair> pairs;
  bool flipped = false;      // hats negated to make half-planes disjoint
  bool consistent = true;    // all finite pairs share one disjointness pattern
  bool verdict = false;      // all finite inner products < -1
  std::string json() const;
};
HexagonReport hexagon_certificate(double x, double y, double z);

}  // namespace chv
