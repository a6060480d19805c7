// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "charvar/words.hpp"

namespace chv {

using cplx = std::complex<double>;

struct Tolerances {
  double conj = 1e-9;      // conjugacy / commutation checks
  double identity = 1e-12; // algebraic identities, well-conditioned inputs
};
Tolerances& tolerances();

struct Mat2C {
  cplx a{1}, b{0}, c{0}, d{1};  // [[a,b],[c,d]]

  static Mat2C identity() { return {}; }
  static Mat2C diag(cplx p, cplx q) { return {p, 0, 0, q}; }
  // Asserts |det - 1| <= 1e-12.
  static Mat2C unimodular(cplx a, cplx b, cplx c, cplx d);

  cplx trace() const { return a + d; }
  cplx det() const { return a * d - b * c; }
  Mat2C inverse() const;   // general inverse (cofactor / det)
  Mat2C adjugate() const;  // [[d,-b],[-c,a]]; equals the inverse when det = 1
  Mat2C adjoint() const;   // conjugate transpose
  Mat2C transpose() const { return {a, c, b, d}; }

  Mat2C operator*(const Mat2C& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2C operator+(const Mat2C& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2C operator-(const Mat2C& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2C operator-() const { return {-a, -b, -c, -d}; }
  friend Mat2C operator*(cplx s, const Mat2C& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

  std::array<cplx, 4> entries() const { return {a, b, c, d}; }
  bool is_real(double tol = 1e-12) const;
};

double max_abs_diff(const Mat2C& x, const Mat2C& y);
// min over the sign: max entrywise |x - (+/-)y|
double projective_diff(const Mat2C& x, const Mat2C& y);

// Sign rule: first nonzero entry (row-major) has positive real part, else
// positive imaginary part.
Mat2C sign_normalize(const Mat2C& m);

struct Mat3C {
  std::array<cplx, 9> e{};  // row-major
  static Mat3C identity();
  cplx& operator()(int i, int j) { return e[3 * i + j]; }
  cplx operator()(int i, int j) const { return e[3 * i + j]; }
  Mat3C operator*(const Mat3C& o) const;
  Mat3C operator-(const Mat3C& o) const;
  Mat3C transpose() const;
  cplx trace() const { return e[0] + e[4] + e[8]; }
  cplx det() const;
};
double max_abs_diff(const Mat3C& x, const Mat3C& y);

Mat2C evaluate_word(const Word& w, const std::vector<Mat2C>& gens);

Mat2C lie_product(const Mat2C& x, const Mat2C& y);

// xi = [[x,-1],[1,0]], eta = [[0,1/zz],[-zz,y]], zz = (z + sqrt(z^2-4))/2.
std::pair<Mat2C, Mat2C> normal_form_pair(cplx x, cplx y, cplx z);

// h = mu*Lie(x,y), mu^2 det L = 1; inverts both by conjugation. Throws
// MathError when |det L| <= 1e-12.
Mat2C conjugating_involution(const Mat2C& x, const Mat2C& y);

Mat2C traceless_projection(const Mat2C& x);
// +/- (2/sqrt(4 - tr^2)) (x - tr/2 I); throws on |tr| = 2.
Mat2C involution_of(const Mat2C& x);

// (2A - tr A I)/sqrt(tr^2 - 4): traceless, det -1. Throws unless real, |tr| > 2.
Mat2C hat(const Mat2C& a);

// Induced action on (e.e, e.f, f.f).
Mat3C sym2(const Mat2C& x);
// Form on Sym^2 preserved by sym2 of unimodular matrices.
Mat3C sym2_form();

// (x - I)/sqrt(tr x - 2) for real x with tr > 2; det -1, square = x.
Mat2C glide_reflection_sqrt(const Mat2C& x);

std::string cplx_str(cplx z);
std::string mat_json(const Mat2C& m);

}  // namespace chv
