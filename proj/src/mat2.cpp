// SPDX-License-Identifier: Apache-2.0
#include "charvar/mat2.hpp"

#include <cmath>
#include <cstdio>

#include "charvar/error.hpp"
#include "json.hpp"

namespace chv {

Tolerances& tolerances() {
  static Tolerances t;
  return t;
}

Mat2C Mat2C::unimodular(cplx a, cplx b, cplx c, cplx d) {
  Mat2C m{a, b, c, d};
  if (std::abs(m.det() - 1.0) > 1e-12) throw MathError("matrix is not unimodular");
  return m;
}

Mat2C Mat2C::inverse() const {
  cplx D = det();
  if (D == cplx(0)) throw MathError("singular matrix");
  return (1.0 / D) * adjugate();
}

Mat2C Mat2C::adjugate() const { return {d, -b, -c, a}; }

Mat2C Mat2C::adjoint() const {
  return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
}

bool Mat2C::is_real(double tol) const {
  for (cplx z : entries())
    if (std::abs(z.imag()) > tol) return false;
  return true;
}

double max_abs_diff(const Mat2C& x, const Mat2C& y) {
  auto p = x.entries(), q = y.entries();
  double m = 0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(p[i] - q[i]));
  return m;
}

double projective_diff(const Mat2C& x, const Mat2C& y) {
  return std::min(max_abs_diff(x, y), max_abs_diff(x, -y));
}

Mat2C sign_normalize(const Mat2C& m) {
  for (cplx z : m.entries()) {
    if (std::abs(z) <= 1e-14) continue;
    if (std::abs(z.real()) > 1e-14) return z.real() > 0 ? m : -m;
    return z.imag() > 0 ? m : -m;
  }
  return m;
}

Mat3C Mat3C::identity() {
  Mat3C m;
  m.e[0] = m.e[4] = m.e[8] = 1;
  return m;
}

Mat3C Mat3C::operator*(const Mat3C& o) const {
  Mat3C r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cplx s = 0;
      for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat3C Mat3C::operator-(const Mat3C& o) const {
  Mat3C r;
  for (int i = 0; i < 9; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

Mat3C Mat3C::transpose() const {
  Mat3C r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
  return r;
}

cplx Mat3C::det() const {
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double max_abs_diff(const Mat3C& x, const Mat3C& y) {
  double m = 0;
  for (int i = 0; i < 9; ++i) m = std::max(m, std::abs(x.e[i] - y.e[i]));
  return m;
}

Mat2C evaluate_word(const Word& w, const std::vector<Mat2C>& gens) {
  if (int(gens.size()) != w.rank()) throw UsageError("evaluate_word: rank mismatch");
  std::vector<Mat2C> inv;
  inv.reserve(gens.size());
  for (const auto& g : gens) inv.push_back(g.adjugate());
  Mat2C r;
  for (const Gen& g : w.letters()) r = r * (g.inverted ? inv : gens)[g.index - 1];
  return r;
}

Mat2C lie_product(const Mat2C& x, const Mat2C& y) { return x * y - y * x; }

std::pair<Mat2C, Mat2C> normal_form_pair(cplx x, cplx y, cplx z) {
  cplx d = z * z - 4.0;
  // A signed zero imaginary part would flip the branch for negative real z.
  if (d.imag() == 0) d = cplx(d.real(), 0.0);
  cplx zz = (z + std::sqrt(d)) / 2.0;
  return {Mat2C{x, -1, 1, 0}, Mat2C{0, 1.0 / zz, -zz, y}};
}

Mat2C conjugating_involution(const Mat2C& x, const Mat2C& y) {
  Mat2C L = lie_product(x, y);
  cplx D = L.det();
  if (std::abs(D) <= 1e-12) throw MathError("reducible pair: det Lie(x,y) = 0");
  return sign_normalize((1.0 / std::sqrt(D)) * L);
}

Mat2C traceless_projection(const Mat2C& x) {
  cplx h = x.trace() / 2.0;
  return x - h * Mat2C::identity();
}

Mat2C involution_of(const Mat2C& x) {
  cplx t = x.trace();
  if (std::abs(t * t - 4.0) <= 1e-9) throw MathError("parabolic or central element has no involution");
  return sign_normalize((2.0 / std::sqrt(4.0 - t * t)) * traceless_projection(x));
}

Mat2C hat(const Mat2C& a) {
  if (!a.is_real(1e-12)) throw MathError("hat: matrix is not real");
  double t = a.trace().real();
  if (std::abs(t) <= 2) throw MathError("hat: |trace| <= 2");
  return (1.0 / std::sqrt(t * t - 4)) * (2.0 * a - t * Mat2C::identity());
}

Mat3C sym2(const Mat2C& m) {
  Mat3C s;
  auto [a, b, c, d] = m.entries();
  s(0, 0) = a * a, s(0, 1) = a * b, s(0, 2) = b * b;
  s(1, 0) = 2.0 * a * c, s(1, 1) = a * d + b * c, s(1, 2) = 2.0 * b * d;
  s(2, 0) = c * c, s(2, 1) = c * d, s(2, 2) = d * d;
  return s;
}

Mat3C sym2_form() {
  Mat3C J;
  J(0, 2) = J(2, 0) = 1;
  J(1, 1) = -0.5;
  return J;
}

Mat2C glide_reflection_sqrt(const Mat2C& x) {
  if (!x.is_real(1e-12)) throw MathError("glide reflection: matrix is not real");
  double t = x.trace().real();
  if (t <= 2) throw MathError("glide reflection: trace must exceed 2");
  return (1.0 / std::sqrt(t - 2)) * (x - Mat2C::identity());
}

std::string cplx_str(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string mat_json(const Mat2C& m) {
  nlohmann::json j;
  j["re"] = {{m.a.real(), m.b.real()}, {m.c.real(), m.d.real()}};
  j["im"] = {{m.a.imag(), m.b.imag()}, {m.c.imag(), m.d.imag()}};
  return j.dump();
}

}  // namespace chv
