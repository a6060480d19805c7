// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace chv {

using Rational = mpq_class;
using cplx = std::complex<double>;

// Ordered list of distinct variable names. Cheap to copy (shared storage).
class VariableSet {
 public:
  VariableSet() : names_(std::make_shared<std::vector<std::string>>()) {}
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  // -1 when absent
  int index_of(std::string_view name) const;

  bool operator==(const VariableSet& o) const {
    return names_ == o.names_ || *names_ == *o.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Fixed variable sets used throughout.
const VariableSet& vars_f2();   // x y z
const VariableSet& vars_f3();   // x1 x2 x3 x12 x13 x23 x123
const VariableSet& vars_s04();  // a b c d x y z
const VariableSet& vars_s12();  // a b u v w x y z
const VariableSet& vars_pqr();  // p q r
const VariableSet& vars_uvw();  // u v w

using Exponent = std::vector<std::uint32_t>;

// Graded lex, "greater" first so the leading term is begin().
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GrlexGreater>;

  explicit Polynomial(VariableSet vars = VariableSet()) : vars_(std::move(vars)) {}
  static Polynomial constant(const VariableSet& vars, const Rational& c);
  static Polynomial variable(const VariableSet& vars, std::string_view name);
  static Polynomial variable(const VariableSet& vars, std::size_t idx);
  // Parse "3/2*x^2*y - (z + 1)^2" over the given variables.
  static Polynomial parse(const VariableSet& vars, std::string_view text);

  const VariableSet& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t num_terms() const { return terms_.size(); }
  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;

  // Adds c * monomial(e), dropping zeros.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator+(Polynomial a, const Rational& c);
  friend Polynomial operator-(Polynomial a, const Rational& c);
  friend Polynomial operator+(const Rational& c, Polynomial a) { return std::move(a) + c; }
  friend Polynomial operator-(const Rational& c, const Polynomial& a);
  Polynomial operator-() const;
  Polynomial pow(unsigned k) const;

  bool operator==(const Polynomial& o) const;

  cplx evaluate(const std::vector<cplx>& values) const;  // in variable order
  cplx evaluate(const std::map<std::string, cplx>& assignment) const;
  Rational evaluate_exact(const std::vector<Rational>& values) const;
  // sum over terms of |coefficient * monomial|: the scale for relative residuals
  double magnitude(const std::vector<cplx>& values) const;

  // Each variable of vars() must be a key of `images`; all images share one
  // target variable set, which becomes the variable set of the result.
  Polynomial substitute(const std::map<std::string, Polynomial>& images) const;
  Polynomial substitute(const std::vector<Polynomial>& images) const;  // in variable order

  std::string str() const;
  std::string json() const;
  static Polynomial from_json(std::string_view text);

 private:
  void check_same(const Polynomial& o) const;
  void add_canonical(const Exponent& e, const Rational& c);
  VariableSet vars_;
  Terms terms_;
};

Polynomial scale(const Polynomial& p, const Rational& c);

// Replace v^2 by s*v - q repeatedly (s, q free of v); result has degree <= 1 in v.
Polynomial reduce_monic_quadratic(const Polynomial& p, std::size_t v, const Polynomial& s,
                                  const Polynomial& q);

// F3 structure: t123 + t132 = f_sigma, t123 * t132 = f_pi, phi = t123^2 - f_sigma t123 + f_pi.
const Polynomial& f3_sum();
const Polynomial& f3_product();
const Polynomial& phi_f3();
Polynomial reduce_mod_phi(const Polynomial& p);

// Parse a rational literal: "3", "-2/5", "0.25", "1e-3" (decimals are exact).
Rational parse_rational(std::string_view s);
std::string rational_str(const Rational& q);

}  // namespace chv
