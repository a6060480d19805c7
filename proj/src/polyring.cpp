// SPDX-License-Identifier: Apache-2.0
#include "charvar/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include "charvar/error.hpp"
#include "json.hpp"

namespace chv {

VariableSet::VariableSet(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw UsageError("duplicate variable name " + names[i]);
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

int VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return int(i);
  return -1;
}

const VariableSet& vars_f2() { static VariableSet v({"x", "y", "z"}); return v; }
const VariableSet& vars_f3() {
  static VariableSet v({"x1", "x2", "x3", "x12", "x13", "x23", "x123"});
  return v;
}
const VariableSet& vars_s04() { static VariableSet v({"a", "b", "c", "d", "x", "y", "z"}); return v; }
const VariableSet& vars_s12() {
  static VariableSet v({"a", "b", "u", "v", "w", "x", "y", "z"});
  return v;
}
const VariableSet& vars_pqr() { static VariableSet v({"p", "q", "r"}); return v; }
const VariableSet& vars_uvw() { static VariableSet v({"u", "v", "w"}); return v; }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return a > b;  // lexicographic, earlier variables dominate
}

// --- construction -----------------------------------------------------------

Polynomial Polynomial::constant(const VariableSet& vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(Exponent(vars.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const VariableSet& vars, std::size_t idx) {
  if (idx >= vars.size()) throw UsageError("variable index out of range");
  Polynomial p(vars);
  Exponent e(vars.size(), 0);
  e[idx] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::variable(const VariableSet& vars, std::string_view name) {
  int i = vars.index_of(name);
  if (i < 0) throw UsageError("unknown variable '" + std::string(name) + "'");
  return variable(vars, std::size_t(i));
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  if (mpz_cmp_ui(c.get_den_mpz_t(), 1) != 0) {
    // callers may hand in e.g. mpq_class(2, 4); GMP arithmetic needs canonical input
    Rational k = c;
    k.canonicalize();
    return add_canonical(e, k);
  }
  add_canonical(e, c);
}

void Polynomial::add_canonical(const Exponent& e, const Rational& c) {
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](auto k) { return k == 0; }));
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[var]);
  return d;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : std::accumulate(terms_.begin()->first.begin(),
                                              terms_.begin()->first.end(), 0u);
}

// --- arithmetic -------------------------------------------------------------

void Polynomial::check_same(const Polynomial& o) const {
  if (!(vars_ == o.vars_)) throw UsageError("polynomial variable sets differ");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_canonical(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_canonical(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial r(a.vars_);
  Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_canonical(e, ca * cb);
    }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, k] : terms_) k *= c;
  return *this;
}

Polynomial operator+(Polynomial a, const Rational& c) {
  a.add_term(Exponent(a.vars_.size(), 0), c);
  return a;
}

Polynomial operator-(Polynomial a, const Rational& c) {
  a.add_term(Exponent(a.vars_.size(), 0), -c);
  return a;
}

Polynomial operator-(const Rational& c, const Polynomial& a) { return -a + c; }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, k] : r.terms_) k = -k;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(vars_, 1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

Polynomial scale(const Polynomial& p, const Rational& c) { return p * c; }

// --- evaluation ---------------------------------------------------------------

namespace {
template <class T>
std::vector<std::vector<T>> power_table(const std::vector<T>& v, const std::vector<unsigned>& deg) {
  std::vector<std::vector<T>> t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    t[i].push_back(T(1));
    for (unsigned k = 1; k <= deg[i]; ++k) t[i].push_back(t[i].back() * v[i]);
  }
  return t;
}
}  // namespace

cplx Polynomial::evaluate(const std::vector<cplx>& values) const {
  if (values.size() != vars_.size()) throw UsageError("evaluate: wrong number of values");
  std::vector<unsigned> deg(vars_.size());
  for (std::size_t i = 0; i < deg.size(); ++i) deg[i] = degree_in(i);
  auto pw = power_table(values, deg);
  cplx s = 0;
  for (const auto& [e, c] : terms_) {
    cplx m = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) m *= pw[i][e[i]];
    s += m;
  }
  return s;
}

cplx Polynomial::evaluate(const std::map<std::string, cplx>& a) const {
  std::vector<cplx> v(vars_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto it = a.find(vars_[i]);
    if (it == a.end()) {
      if (degree_in(i) == 0) continue;
      throw UsageError("variable '" + vars_[i] + "' not bound");
    }
    v[i] = it->second;
  }
  return evaluate(v);
}

double Polynomial::magnitude(const std::vector<cplx>& values) const {
  if (values.size() != vars_.size()) throw UsageError("magnitude: wrong number of values");
  double s = 0;
  for (const auto& [e, c] : terms_) {
    double m = std::abs(c.get_d());
    for (std::size_t i = 0; i < e.size(); ++i) m *= std::pow(std::abs(values[i]), double(e[i]));
    s += m;
  }
  return s;
}

Rational Polynomial::evaluate_exact(const std::vector<Rational>& values) const {
  if (values.size() != vars_.size()) throw UsageError("evaluate: wrong number of values");
  std::vector<unsigned> deg(vars_.size());
  for (std::size_t i = 0; i < deg.size(); ++i) deg[i] = degree_in(i);
  auto pw = power_table(values, deg);
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i) m *= pw[i][e[i]];
    s += m;
  }
  return s;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != vars_.size()) throw UsageError("substitute: wrong number of images");
  if (images.empty()) return *this;
  const VariableSet& tgt = images[0].vars();
  for (const auto& p : images)
    if (!(p.vars() == tgt)) throw UsageError("substitute: images over different variable sets");
  std::vector<unsigned> deg(vars_.size());
  for (std::size_t i = 0; i < deg.size(); ++i) deg[i] = degree_in(i);
  std::vector<std::vector<Polynomial>> pw(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    pw[i].push_back(constant(tgt, 1));
    for (unsigned k = 1; k <= deg[i]; ++k) pw[i].push_back(pw[i].back() * images[i]);
  }
  Polynomial r(tgt);
  for (const auto& [e, c] : terms_) {
    Polynomial m = constant(tgt, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m *= pw[i][e[i]];
    r += m;
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const {
  std::vector<Polynomial> v;
  VariableSet tgt;
  bool have = false;
  for (const auto& [k, p] : images) tgt = p.vars(), have = true;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = images.find(vars_[i]);
    if (it != images.end()) {
      v.push_back(it->second);
    } else if (degree_in(i) == 0 && have) {
      v.push_back(Polynomial(tgt));  // unused variable; any image works
    } else {
      throw UsageError("substitute: no image for variable '" + vars_[i] + "'");
    }
  }
  return substitute(v);
}

// --- text -----------------------------------------------------------------------

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += rational_str(a);
    else if (a == 1)
      s += mono;
    else
      s += rational_str(a) + "*" + mono;
  }
  return s;
}

std::string Polynomial::json() const {
  nlohmann::json j;
  j["variables"] = vars_.names();
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : terms_)
    j["terms"].push_back({{"exp", e},
                          {"num", c.get_num().get_str()},
                          {"den", c.get_den().get_str()}});
  return j.dump();
}

Polynomial Polynomial::from_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  VariableSet vs(j.at("variables").get<std::vector<std::string>>());
  Polynomial p(vs);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<Exponent>();
    if (e.size() != vs.size()) throw UsageError("polynomial JSON: exponent length mismatch");
    auto str_of = [](const nlohmann::json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    Rational c(mpz_class(str_of(t.at("num"))), mpz_class(str_of(t.at("den"))));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

Rational parse_rational(std::string_view s) {
  std::string t(s);
  auto bad = [&] { throw UsageError("bad rational literal '" + t + "'"); };
  if (t.empty()) bad();
  if (auto slash = t.find('/'); slash != std::string::npos) {
    Rational n = parse_rational(t.substr(0, slash)), d = parse_rational(t.substr(slash + 1));
    if (d == 0) bad();
    return n / d;
  }
  std::size_t i = 0;
  bool neg = false;
  if (t[i] == '+' || t[i] == '-') neg = t[i++] == '-';
  std::string digits;
  long frac = 0;
  bool seen_dot = false, any = false;
  for (; i < t.size() && t[i] != 'e' && t[i] != 'E'; ++i) {
    if (t[i] == '.') {
      if (seen_dot) bad();
      seen_dot = true;
    } else if (std::isdigit((unsigned char)t[i])) {
      digits += t[i];
      any = true;
      if (seen_dot) ++frac;
    } else {
      bad();
    }
  }
  if (!any) bad();
  long ex = 0;
  if (i < t.size()) {
    try {
      std::size_t used = 0;
      ex = std::stol(t.substr(i + 1), &used);
      if (used != t.size() - i - 1) bad();
    } catch (const std::logic_error&) {
      bad();
    }
  }
  ex -= frac;
  mpz_class num(digits, 10), p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, (unsigned long)std::labs(ex));
  Rational r = ex >= 0 ? Rational(num * p10) : Rational(num, p10);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

// Recursive descent: expr := term {(+|-) term}; term := unary {* unary | / unary};
// unary := [+|-] power; power := atom [^ int]; atom := number | name | ( expr ).
namespace {
struct Parser {
  const VariableSet& vars;
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& m) {
    throw UsageError("polynomial parse error at " + std::to_string(i) + ": " + m);
  }
  void ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) return ++i, true;
    return false;
  }
  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }
  Polynomial term() {
    Polynomial p = unary();
    while (true) {
      if (eat('*')) {
        p *= unary();
      } else if (eat('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by non-constant");
        p *= Rational(1) / d.terms().begin()->second;
      } else {
        return p;
      }
    }
  }
  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Polynomial power() {
    Polynomial a = atom();
    if (eat('^')) {
      ws();
      std::size_t j = i;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
      if (j == i) fail("expected exponent");
      a = a.pow(unsigned(std::stoul(std::string(s.substr(j, i - j)))));
    }
    return a;
  }
  Polynomial atom() {
    ws();
    if (i >= s.size()) fail("unexpected end");
    if (eat('(')) {
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    std::size_t j = i;
    if (std::isdigit((unsigned char)s[i]) || s[i] == '.') {
      while (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '.')) ++i;
      return Polynomial::constant(vars, parse_rational(s.substr(j, i - j)));
    }
    if (std::isalpha((unsigned char)s[i]) || s[i] == '_') {
      while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
      std::string name(s.substr(j, i - j));
      if (vars.index_of(name) < 0) fail("unknown variable '" + name + "'");
      return Polynomial::variable(vars, name);
    }
    fail(std::string("unexpected '") + s[i] + "'");
  }
};
}  // namespace

Polynomial Polynomial::parse(const VariableSet& vars, std::string_view text) {
  Parser ps{vars, text};
  Polynomial p = ps.expr();
  ps.ws();
  if (ps.i != text.size()) ps.fail("trailing input");
  return p;
}

// --- quadratic elimination ------------------------------------------------------

Polynomial reduce_monic_quadratic(const Polynomial& p, std::size_t v, const Polynomial& s,
                                  const Polynomial& q) {
  unsigned deg = p.degree_in(v);
  if (deg < 2) return p;
  const VariableSet& vs = p.vars();
  // coefficient polynomials of v^k
  std::vector<Polynomial> coef(deg + 1, Polynomial(vs));
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f[v] = 0;
    coef[e[v]].add_term(f, c);
  }
  for (unsigned k = deg; k >= 2; --k) {
    if (coef[k].is_zero()) continue;
    coef[k - 1] += coef[k] * s;
    coef[k - 2] -= coef[k] * q;
  }
  Polynomial r = coef[0];
  r += coef[1] * Polynomial::variable(vs, v);
  return r;
}

const Polynomial& f3_sum() {
  static const Polynomial p =
      Polynomial::parse(vars_f3(), "x12*x3 + x13*x2 + x23*x1 - x1*x2*x3");
  return p;
}

const Polynomial& f3_product() {
  static const Polynomial p = Polynomial::parse(
      vars_f3(),
      "x1^2 + x2^2 + x3^2 + x12^2 + x13^2 + x23^2"
      " - x1*x2*x12 - x2*x3*x23 - x1*x3*x13 + x12*x23*x13 - 4");
  return p;
}

const Polynomial& phi_f3() {
  static const Polynomial p = [] {
    Polynomial t = Polynomial::variable(vars_f3(), "x123");
    return t * t - f3_sum() * t + f3_product();
  }();
  return p;
}

Polynomial reduce_mod_phi(const Polynomial& p) {
  if (!(p.vars() == vars_f3())) throw UsageError("reduce_mod_phi expects the F3 variable set");
  return reduce_monic_quadratic(p, 6, f3_sum(), f3_product());
}

}  // namespace chv
