// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charvar/mat2.hpp"
#include "charvar/polyring.hpp"

namespace chv {

struct CharacterF2 {
  cplx x, y, z;
};

struct CharacterF3 {
  cplx t1, t2, t3, t12, t13, t23, t123, t132;
  // (t1, t2, t3, t12, t13, t23, t123): the F3 polynomial coordinates
  std::vector<cplx> seven() const { return {t1, t2, t3, t12, t13, t23, t123}; }
};

// The six coordinates that determine a triple character up to the double cover.
struct SixTraces {
  cplx t1, t2, t3, t12, t13, t23;
};

enum class RealCharClass {
  SU2FixedPoint,
  SL2RPlane,
  ReducibleCentral,
  ReducibleSO2,
  ReducibleSO11,
  ReducibleParabolicFixed,
  ReducibleUndetermined,
};
std::string to_string(RealCharClass c);

enum class Branch { Plus, Minus };

cplx kappa_value(cplx x, cplx y, cplx z);
Rational kappa_exact(const Rational& x, const Rational& y, const Rational& z);

CharacterF2 character_of_pair(const Mat2C& xi, const Mat2C& eta);
CharacterF3 character_of_triple(const Mat2C& x1, const Mat2C& x2, const Mat2C& x3);

bool is_irreducible(const CharacterF2& c, double tol = 1e-9);
bool is_irreducible_exact(const Rational& x, const Rational& y, const Rational& z);

struct IrreducibilityReport {
  cplx kappa;              // from traces
  cplx commutator_trace;   // tr(xi eta xi^-1 eta^-1)
  cplx det_lie;            // det(xi eta - eta xi)
  cplx det_span;           // det of the 4x4 entry matrix of I, xi, eta, xi eta
  bool irreducible;        // kappa != 2
  bool agree;              // every criterion gives the same answer, and det_span = 2 - kappa
};
IrreducibilityReport irreducibility_witnesses(const Mat2C& xi, const Mat2C& eta);

RealCharClass classify_real_character(double x, double y, double z);

// Real pair (X, Y) with tr X = x, tr Y = y, tr XY = z, X = [[x,-1],[1,0]].
// Empty when the character has no real section (SU(2) type).
std::optional<std::pair<Mat2C, Mat2C>> real_normal_form(double x, double y, double z);

// Precondition kappa <= -2 and (x,y,z) != 0; verifies det Lie > 0 on a real pair.
bool axes_cross(double x, double y, double z);

// Invariant Hermitian form of the normal-form pair for an SU(2) character
// (|z| <= 2): det H = 2 - kappa.
Mat2C hermitian_form(double x, double y, double z);

// Roots of lambda^2 - f_sigma lambda + f_pi; first is the "+" root
// (larger real part, then larger imaginary part).
std::pair<cplx, cplx> triple_trace_roots(const SixTraces& s);

std::array<Mat2C, 3> construct_triple(const SixTraces& s, Branch branch);

std::string character_json(const CharacterF2& c);
std::string character_json(const CharacterF3& c);

}  // namespace chv
