// SPDX-License-Identifier: Apache-2.0
//
// charvar: command-line front end for the SL(2,C) character-variety toolkit.
//
// Commands:
//   trace-poly   trace polynomial of a word (rank 2 or 3)
//   eval-word    evaluate a word's trace at a character, cross-checked by matrices
//   construct    matrices realising a character (pair or triple)
//   fricke       Fricke-space membership for a surface
//   fn2trace     Fenchel-Nielsen coordinates of the one-holed torus -> traces
//   cover        print or apply a character-ring homomorphism
//   verify       seeded property suites
//
// Exit codes: 0 ok, 1 mathematical error or failed verification, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "charvar/chars.hpp"
#include "charvar/covers.hpp"
#include "charvar/error.hpp"
#include "charvar/fricke.hpp"
#include "charvar/hypgeom.hpp"
#include "charvar/rng.hpp"
#include "charvar/tracepoly.hpp"

using namespace chv;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Literals

double parse_real(const std::string& s) { return parse_rational(s).get_d(); }

// "1.5", "3/4", "2i", "1-0.5i", "-i"
cplx parse_complex(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw UsageError("empty number");
  if (s.back() != 'i') return parse_real(s);
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  auto imag = [](std::string t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split == std::string::npos) return {0.0, imag(s)};
  return {parse_real(s.substr(0, split)), imag(s.substr(split))};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

std::vector<cplx> parse_complex_list(const std::string& s, std::size_t want, const char* what) {
  auto parts = split_list(s);
  if (parts.size() != want)
    throw UsageError(std::string(what) + " expects " + std::to_string(want) + " comma-separated values");
  std::vector<cplx> v;
  for (const auto& p : parts) v.push_back(parse_complex(p));
  return v;
}

std::vector<double> parse_real_list(const std::string& s, std::size_t want, const char* what) {
  auto parts = split_list(s);
  if (parts.size() != want)
    throw UsageError(std::string(what) + " expects " + std::to_string(want) + " comma-separated values");
  std::vector<double> v;
  for (const auto& p : parts) v.push_back(parse_real(p));
  return v;
}

json cplx_json(cplx z) {
  if (z.imag() == 0) return z.real();
  return json{{"re", z.real()}, {"im", z.imag()}};
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_residual(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Exact 2x2 arithmetic for the exact oracle mode.

struct RatMat {
  Rational a, b, c, d;
  RatMat operator*(const RatMat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  RatMat inverse() const { return {d, -b, -c, a}; }  // det = 1
  Rational trace() const { return a + d; }
};

RatMat random_rational_unimodular(Rng& rng) {
  for (;;) {
    Rational a(rng.integer(-4, 4), rng.integer(1, 3));
    if (a == 0) continue;
    Rational b(rng.integer(-4, 4), rng.integer(1, 3)), c(rng.integer(-4, 4), rng.integer(1, 3));
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    Rational d = (1 + b * c) / a;
    return {a, b, c, d};
  }
}

RatMat evaluate_word_exact(const Word& w, const std::vector<RatMat>& g) {
  RatMat r{1, 0, 0, 1};
  for (const Gen& x : w.letters()) r = r * (x.inverted ? g[x.index - 1].inverse() : g[x.index - 1]);
  return r;
}

std::vector<Rational> trace_coordinates_exact(const std::vector<RatMat>& g) {
  if (g.size() == 2) return {g[0].trace(), g[1].trace(), (g[0] * g[1]).trace()};
  return {g[0].trace(),
          g[1].trace(),
          g[2].trace(),
          (g[0] * g[1]).trace(),
          (g[0] * g[2]).trace(),
          (g[1] * g[2]).trace(),
          (g[0] * g[1] * g[2]).trace()};
}

// ---------------------------------------------------------------------------
// Verification suites. Every trial draws from Rng::stream(seed, trial) so the
// output depends only on (seed, trials, tolerance, mode).

struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  double tolerance = 1e-8;
  std::string mode = "float";
};

struct Check {
  std::string name;
  double residual;
  bool ok;
};

using Suite = std::function<std::vector<Check>(const SuiteConfig&)>;

Check max_check(const std::string& name, double worst, double tol) { return {name, worst, worst <= tol}; }

std::vector<Check> suite_identities(const SuiteConfig& cfg) {
  std::vector<Check> out;
  Polynomial comm = trace_poly_f2(parse_word("XYxy", 2));
  out.push_back({"commutator polynomial (symbolic)", 0, comm == kappa()});

  const auto& V = vars_s04();
  Polynomial sm = Polynomial::parse(V, "(y - z)*(2 - x) + (a - b)*(c - d)");
  Polynomial sp = Polynomial::parse(V, "(y + z)*(2 + x) - (a + b)*(c + d)");
  Polynomial kab = Polynomial::parse(V, "x^2 + a^2 + b^2 - a*b*x - 4");
  Polynomial kcd = Polynomial::parse(V, "x^2 + c^2 + d^2 - c*d*x - 4");
  Polynomial lhs = Polynomial::parse(V, "4*(4 - x^2)") * s04_defining_polynomial();
  Polynomial rhs = Polynomial::parse(V, "2 + x") * sm * sm + Polynomial::parse(V, "2 - x") * sp * sp -
                   Rational(4) * kab * kcd;
  out.push_back({"four-holed sphere identity (symbolic)", 0, lhs == rhs});

  double vogt = 0, comm_num = 0, sym = 0, herm = 0;
  const Mat3C J = sym2_form();
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::stream(cfg.seed, t);
    std::array<Mat2C, 4> m{rng.unimodular(), rng.unimodular(), rng.unimodular(), rng.unimodular()};
    vogt = std::max(vogt, quadruple_trace_check(m));
    Mat2C c = m[0] * m[1] * m[0].adjugate() * m[1].adjugate();
    cplx k = kappa().evaluate(trace_coordinates({m[0], m[1]}));
    comm_num = std::max(comm_num, std::abs(k - c.trace()) / std::max(1.0, std::abs(c.trace())));
    Mat3C s = sym2(m[2]);
    sym = std::max(sym, max_abs_diff(s.transpose() * J * s, J) / (1 + std::norm(s.trace())));
    double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2), z = rng.uniform(-2, 2);
    if (classify_real_character(x, y, z) == RealCharClass::SU2FixedPoint) {
      Mat2C H = hermitian_form(x, y, z);
      auto [a, b] = normal_form_pair(x, y, z);
      herm = std::max({herm, max_abs_diff(a.adjoint() * H * a, H), max_abs_diff(b.adjoint() * H * b, H)});
    }
  }
  out.push_back(max_check("quadruple trace identity", vogt, cfg.tolerance));
  out.push_back(max_check("commutator trace (numeric)", comm_num, cfg.tolerance));
  out.push_back(max_check("symmetric square preserves form", sym, cfg.tolerance));
  out.push_back(max_check("Hermitian form invariance", herm, cfg.tolerance));
  return out;
}

std::vector<Check> suite_oracle(const SuiteConfig& cfg) {
  std::vector<Check> out;
  for (int rank : {2, 3}) {
    int max_len = rank == 2 ? 12 : 8;
    double worst = 0;
    bool exact_ok = true;
    for (int t = 0; t < cfg.trials; ++t) {
      Rng rng = Rng::stream(cfg.seed, 2 * t + (rank - 2));
      Word w = rng.word(rank, max_len);
      Polynomial p = trace_poly(w);
      if (cfg.mode == "exact") {
        std::vector<RatMat> g;
        for (int k = 0; k < rank; ++k) g.push_back(random_rational_unimodular(rng));
        Rational diff = p.evaluate_exact(trace_coordinates_exact(g)) - evaluate_word_exact(w, g).trace();
        if (diff != 0) {
          exact_ok = false;
          worst = std::max(worst, std::abs(diff.get_d()));
        }
      } else {
        std::vector<Mat2C> g;
        for (int k = 0; k < rank; ++k) g.push_back(rng.unimodular());
        cplx tr = evaluate_word(w, g).trace();
        cplx f = p.evaluate(trace_coordinates(g));
        worst = std::max(worst, std::abs(f - tr) / std::max(1.0, std::abs(tr)));
      }
    }
    std::string name = "rank-" + std::to_string(rank) + " word traces";
    if (cfg.mode == "exact")
      out.push_back({name + " (exact)", worst, exact_ok});
    else
      out.push_back(max_check(name, worst, rank == 2 ? cfg.tolerance : 10 * cfg.tolerance));
  }
  double rel = 0;
  auto [fs, fp] = sum_product_relation_polys();
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::stream(cfg.seed ^ 0x5eedULL, t);
    auto c = character_of_triple(rng.unimodular(), rng.unimodular(), rng.unimodular());
    auto v = c.seven();
    rel = std::max({rel, std::abs(phi_polynomial().evaluate(v)) / (1 + phi_polynomial().magnitude(v)),
                    std::abs(fs.evaluate(v) - c.t123 - c.t132) / (1 + fs.magnitude(v)),
                    std::abs(fp.evaluate(v) - c.t123 * c.t132) / (1 + fp.magnitude(v))});
  }
  out.push_back(max_check("hypersurface and relations", rel, cfg.tolerance));
  return out;
}

std::vector<Check> suite_fricke(const SuiteConfig& cfg) {
  std::vector<Check> out;
  double t = -18 - 10 * std::sqrt(5.0);
  out.push_back({"four-holed witness (wrong component)", 0,
                 member_s04({2, 2, 2, 2, -3, 2, 7}).verdict == S04Verdict::NonmemberWrongComponent});
  out.push_back({"four-holed witness (member)", 0,
                 member_s04({3, 3, 3, 3, -3, t, t}).verdict == S04Verdict::Member});
  double fn = 0, hex = 0;
  bool slice = true, orbit = true, hex_ok = true;
  for (int k = 0; k < cfg.trials; ++k) {
    Rng rng = Rng::stream(cfg.seed, k);
    FNCoords f{rng.uniform(0.1, 5), rng.uniform(-5, 5), rng.uniform(0, 4)};
    auto r = fn_to_traces(f);
    fn = std::max(fn, std::abs(r.kappa + 2 * std::cosh(f.b / 2)) / (1 + std::abs(r.kappa)));
    slice = slice && member_s11(r.x, r.y, r.z).verdict == S11Verdict::MemberSlice;
    bool in = member_s11(r.x, r.y, r.z).verdict != S11Verdict::Nonmember;
    for (const auto& s : h1z2_action(r.x, r.y, r.z))
      orbit = orbit && (member_s11(s[0], s[1], s[2]).verdict != S11Verdict::Nonmember) == in;
    auto h = hexagon_certificate(rng.uniform(-10, -2.01), rng.uniform(-10, -2.01), rng.uniform(-10, -2.01));
    hex_ok = hex_ok && h.verdict;
    for (const auto& p : h.pairs) hex = std::max(hex, p.inner ? std::abs(*p.inner - p.formula) : 1.0);
  }
  out.push_back(max_check("Fenchel-Nielsen boundary trace", fn, cfg.tolerance));
  out.push_back({"Fenchel-Nielsen image in slice", 0, slice});
  out.push_back({"sign action preserves one-holed torus set", 0, orbit});
  out.push_back({"hexagon certificate", hex, hex_ok && hex <= cfg.tolerance});
  return out;
}

std::vector<Check> suite_covers(const SuiteConfig& cfg) {
  std::vector<Check> out;
  out.push_back({"c02s04 image of defining polynomial", 0,
                 cover_c02_to_s04().apply(s04_defining_polynomial()).is_zero()});
  out.push_back({"c11s12 images of relations", 0,
                 cover_c11_to_s12().apply(s12_sum_relation()).is_zero() &&
                     cover_c11_to_s12().apply(s12_product_relation()).is_zero()});
  out.push_back({"embed image of hypersurface", 0, embed_r2_in_r3().apply(phi_polynomial()).is_zero()});
  const auto& V = vars_f3();
  bool deck = true;
  double nat = 0;
  for (int k = 0; k < cfg.trials; ++k) {
    Rng rng = Rng::stream(cfg.seed, k);
    Polynomial p(V);
    for (int t = 0; t < 6; ++t) {
      Exponent e(V.size(), 0);
      int deg = rng.integer(0, 4);
      for (int d = 0; d < deg; ++d) ++e[rng.integer(0, 6)];
      p.add_term(e, Rational(rng.integer(-9, 9), rng.integer(1, 4)));
    }
    p = reduce_mod_phi(p);
    deck = deck && deck_involution_f3(deck_involution_f3(p)) == p;
    Mat2C P = rng.unimodular(), Q = rng.unimodular();
    auto pq = trace_coordinates({P, Q});
    for (std::string name : {"embed", "c02s04", "c11s12"}) {
      auto vals = ring_map_by_name(name).evaluate(pq);
      auto words = cover_words(name);
      for (std::size_t i = 0; i < words.size(); ++i) {
        cplx tr = evaluate_word(parse_word(words[i].word, 2), {P, Q}).trace();
        nat = std::max(nat, std::abs(vals[i] - tr) / std::max(1.0, std::abs(tr)));
      }
    }
  }
  out.push_back({"deck involution squared is identity", 0, deck});
  out.push_back(max_check("ring maps agree with matrices", nat, cfg.tolerance));
  return out;
}

std::vector<Check> suite_coxeter(const SuiteConfig& cfg) {
  double worst = 0;
  const Mat2C mI = -1.0 * Mat2C::identity();
  auto sgn = [](const Mat2C& a, const Mat2C& b) {
    return std::min(max_abs_diff(a, b), max_abs_diff(a, -1.0 * b));
  };
  for (int k = 0; k < cfg.trials; ++k) {
    Rng rng = Rng::stream(cfg.seed, k);
    Mat2C xi = rng.unimodular(), eta = rng.unimodular();
    if (!is_irreducible(character_of_pair(xi, eta))) continue;
    auto c = coxeter_extension(xi, eta);
    Mat2C zeta = eta.adjugate() * xi.adjugate();
    worst = std::max({worst, max_abs_diff(c.xy * c.xy, mI), max_abs_diff(c.yz * c.yz, mI),
                      max_abs_diff(c.zx * c.zx, mI), sgn(c.zx * c.xy, xi), sgn(c.xy * c.yz, eta),
                      sgn(c.yz * c.zx, zeta)});
  }
  return {max_check("Coxeter extension", worst, cfg.tolerance)};
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> s{{"identities", suite_identities},
                                              {"oracle", suite_oracle},
                                              {"fricke", suite_fricke},
                                              {"covers", suite_covers},
                                              {"coxeter", suite_coxeter}};
  return s;
}

// ---------------------------------------------------------------------------
// Command bodies

int run_trace_poly(const std::string& word, int rank, bool as_json) {
  Word w = parse_word(word, rank);
  Polynomial p = trace_poly(w);
  if (as_json)
    std::cout << json{{"word", w.str()}, {"rank", rank}, {"polynomial", json::parse(p.json())},
                      {"text", p.str()}}
                     .dump(2)
              << "\n";
  else
    std::cout << p.str() << "\n";
  return 0;
}

int run_eval_word(const std::string& word, int rank, const std::string& at, bool as_json) {
  Word w = parse_word(word, rank);
  Polynomial p = trace_poly(w);
  std::vector<cplx> vals = parse_complex_list(at, rank == 2 ? 3 : rank == 3 ? 7 : 1, "--at");
  cplx value = p.evaluate(vals);
  json j{{"word", w.str()}, {"value", cplx_json(value)}};
  std::string check;
  if (rank == 2) {
    auto [a, b] = normal_form_pair(vals[0], vals[1], vals[2]);
    cplx tr = evaluate_word(w, {a, b}).trace();
    j["matrix_trace"] = cplx_json(tr);
    j["residual"] = std::abs(tr - value);
    check = "  (matrix check " + cplx_str(tr) + ")";
  }
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << cplx_str(value) << check << "\n";
  return 0;
}

int run_construct(const std::string& pair, const std::string& triple, const std::string& branch,
                  bool as_json) {
  json j;
  if (!pair.empty()) {
    auto v = parse_complex_list(pair, 3, "--pair");
    auto [a, b] = normal_form_pair(v[0], v[1], v[2]);
    auto c = character_of_pair(a, b);
    j = {{"X", json::parse(mat_json(a))},
         {"Y", json::parse(mat_json(b))},
         {"character", json::parse(character_json(c))},
         {"irreducible", is_irreducible(c)}};
  } else {
    auto v = parse_complex_list(triple, 6, "--triple");
    if (branch != "plus" && branch != "minus") throw UsageError("--branch must be plus or minus");
    Branch br = branch == "plus" ? Branch::Plus : Branch::Minus;
    auto m = construct_triple({v[0], v[1], v[2], v[3], v[4], v[5]}, br);
    auto c = character_of_triple(m[0], m[1], m[2]);
    j = {{"X1", json::parse(mat_json(m[0]))},
         {"X2", json::parse(mat_json(m[1]))},
         {"X3", json::parse(mat_json(m[2]))},
         {"branch", branch},
         {"character", json::parse(character_json(c))}};
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) std::cout << it.key() << ": " << it.value().dump() << "\n";
  }
  return 0;
}

int run_fricke(const std::string& surface, const std::string& coords, bool as_json) {
  std::string verdict, detail;
  bool member = false;
  if (surface == "s03" || surface == "s11" || surface == "c02" || surface == "c11") {
    auto v = parse_real_list(coords, 3, "--coords");
    if (surface == "s03") {
      auto r = member_s03(v[0], v[1], v[2]);
      verdict = to_string(r.verdict);
      detail = r.json();
      member = r.verdict != S03Verdict::Nonmember;
    } else if (surface == "s11") {
      auto r = member_s11(v[0], v[1], v[2]);
      verdict = to_string(r.verdict);
      detail = r.json();
      member = r.verdict != S11Verdict::Nonmember;
    } else {
      member = surface == "c02" ? member_c02(v[0], v[1], v[2]) : member_c11(v[0], v[1], v[2]);
      verdict = member ? "member" : "nonmember";
      detail = json{{"verdict", verdict}}.dump();
    }
  } else if (surface == "s04") {
    auto v = parse_real_list(coords, 7, "--coords");
    auto r = member_s04({v[0], v[1], v[2], v[3], v[4], v[5], v[6]});
    verdict = to_string(r.verdict);
    detail = r.json();
    member = r.verdict == S04Verdict::Member;
  } else if (surface == "s12") {
    auto v = parse_real_list(coords, 8, "--coords");
    auto r = member_s12({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
    verdict = to_string(r.verdict);
    detail = r.json();
    member = r.verdict == S12Verdict::Member;
  } else {
    throw UsageError("unknown surface '" + surface + "' (s03, s11, c02, c11, s04, s12)");
  }
  if (as_json)
    std::cout << json::parse(detail).dump(2) << "\n";
  else
    std::cout << verdict << "\n";
  (void)member;
  return 0;
}

int run_fn2trace(const std::string& l, const std::string& tau, const std::string& b, bool as_json) {
  auto r = fn_to_traces({parse_real(l), parse_real(tau), parse_real(b)});
  if (as_json)
    std::cout << json::parse(r.json()).dump(2) << "\n";
  else
    std::cout << num(r.x) << " " << num(r.y) << " " << num(r.z) << "\n";
  return 0;
}

int run_cover(const std::string& name, const std::string& apply, bool as_json) {
  const RingMap& m = ring_map_by_name(name);
  if (!apply.empty()) {
    Polynomial p = Polynomial::parse(m.source, apply);
    Polynomial q = m.apply(p);
    if (name == "deck") q = reduce_mod_phi(q);
    if (as_json)
      std::cout << json{{"map", name}, {"input", p.str()}, {"image", q.str()}}.dump(2) << "\n";
    else
      std::cout << q.str() << "\n";
    return 0;
  }
  if (as_json) {
    std::cout << json::parse(m.json()).dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < m.images.size(); ++i)
      std::cout << m.source.names()[i] << " -> " << m.images[i].str() << "\n";
  }
  return 0;
}

int run_verify(const std::string& name, const SuiteConfig& cfg, bool as_json) {
  auto it = suites().find(name);
  if (it == suites().end()) throw UsageError("unknown suite '" + name + "'");
  if (cfg.trials < 1) throw UsageError("--trials must be >= 1");
  if (cfg.mode != "float" && cfg.mode != "exact") throw UsageError("--mode must be float or exact");
  auto checks = it->second(cfg);
  bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  if (as_json) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.name}, {"max_residual", c.residual}, {"pass", c.ok}});
    std::cout << json{{"suite", name},
                      {"seed", cfg.seed},
                      {"trials", cfg.trials},
                      {"tolerance", cfg.tolerance},
                      {"mode", cfg.mode},
                      {"checks", arr},
                      {"pass", all}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "suite " << name << " seed=" << cfg.seed << " trials=" << cfg.trials
              << " tolerance=" << fmt_residual(cfg.tolerance) << " mode=" << cfg.mode << "\n";
    for (const auto& c : checks)
      std::cout << (c.ok ? "  pass " : "  FAIL ") << c.name << "  max residual " << fmt_residual(c.residual)
                << "\n";
    std::cout << (all ? "pass" : "FAIL") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace polynomials, characters and Fricke spaces for SL(2,C)"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  std::string word, at, pair, triple, branch = "plus", surface, coords, l, tau = "0", b = "0", map_name,
                    apply, suite, tolerance = "1e-8";
  int rank = 2;
  SuiteConfig cfg;
  std::function<int()> action;

  auto* tp = app.add_subcommand("trace-poly", "Trace polynomial of a word");
  tp->add_option("word", word, "Word, e.g. \"X Y x y\" or \"X1 X3 X2\"")->required();
  tp->add_option("--rank", rank, "Number of generators (1-3)")->check(CLI::Range(1, 3));
  tp->callback([&] { action = [&] { return run_trace_poly(word, rank, as_json); }; });

  auto* ew = app.add_subcommand("eval-word", "Evaluate a word's trace at a character");
  ew->add_option("word", word, "Word")->required();
  ew->add_option("--rank", rank, "Number of generators (1-3)")->check(CLI::Range(1, 3));
  ew->add_option("--at", at, "Comma-separated trace coordinates (x,y,z for rank 2)")->required();
  ew->callback([&] { action = [&] { return run_eval_word(word, rank, at, as_json); }; });

  auto* co = app.add_subcommand("construct", "Matrices realising a character");
  auto* op = co->add_option("--pair", pair, "x,y,z (complex literals like 1+2i allowed)");
  auto* ot = co->add_option("--triple", triple, "t1,t2,t3,t12,t13,t23");
  op->excludes(ot);
  co->add_option("--branch", branch, "Root of the triple-trace quadratic: plus|minus");
  co->callback([&] {
    if (pair.empty() && triple.empty()) throw CLI::ValidationError("construct", "need --pair or --triple");
    action = [&] { return run_construct(pair, triple, branch, as_json); };
  });

  auto* fr = app.add_subcommand("fricke", "Fricke-space membership");
  fr->add_option("surface", surface, "s03 | s11 | c02 | c11 | s04 | s12")->required();
  fr->add_option("--coords", coords, "Comma-separated coordinates")->required();
  fr->callback([&] { action = [&] { return run_fricke(surface, coords, as_json); }; });

  auto* fn = app.add_subcommand("fn2trace", "Fenchel-Nielsen coordinates of the one-holed torus to traces");
  fn->add_option("--l", l, "Length of X (> 0)")->required();
  fn->add_option("--tau", tau, "Twist");
  fn->add_option("--b", b, "Boundary length (>= 0)");
  fn->callback([&] { action = [&] { return run_fn2trace(l, tau, b, as_json); }; });

  auto* cv = app.add_subcommand("cover", "Character-ring homomorphisms");
  cv->add_option("map", map_name, "deck | embed | c02s04 | c11s12")->required();
  cv->add_option("--apply", apply, "Polynomial in the source variables");
  cv->callback([&] { action = [&] { return run_cover(map_name, apply, as_json); }; });

  auto* ve = app.add_subcommand("verify", "Seeded property suites");
  ve->add_option("suite", suite, "identities | oracle | fricke | covers | coxeter")->required();
  ve->add_option("--seed", cfg.seed, "RNG seed");
  ve->add_option("--trials", cfg.trials, "Number of trials");
  ve->add_option("--tolerance", tolerance, "Residual tolerance");
  ve->add_option("--mode", cfg.mode, "float | exact");
  ve->callback([&] {
    action = [&] {
      cfg.tolerance = parse_real(tolerance);
      return run_verify(suite, cfg, as_json);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
