// SPDX-License-Identifier: Apache-2.0
#include "charvar/tracepoly.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "charvar/error.hpp"

namespace chv {

const VariableSet& vars_f1() { static VariableSet v({"x"}); return v; }

const VariableSet& vars_for_rank(int rank) {
  switch (rank) {
    case 1: return vars_f1();
    case 2: return vars_f2();
    case 3: return vars_f3();
    default: throw UsageError("trace polynomials are available for rank 1..3 only");
  }
}

namespace {

// Letters as signed generator indices: +k = X_k, -k = X_k^-1.
using Letters = std::vector<int>;

class Engine {
 public:
  explicit Engine(int rank) : rank_(rank), vars_(vars_for_rank(rank)) {}

  Polynomial trace(Letters w) {
    cyclic_normalize(w);
    if (w.empty()) return Polynomial::constant(vars_, 2);
    std::string key = canonical_key(w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Letters c = from_key(key);
    Polynomial r = compute(c);
    if (rank_ == 3) r = reduce_mod_phi(r);
    memo_.emplace(std::move(key), r);
    return r;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  Polynomial var(int k) const { return Polynomial::variable(vars_, std::size_t(k - 1)); }

  static void cyclic_normalize(Letters& w) {
    Letters out;
    for (int g : w) {
      if (!out.empty() && out.back() == -g) out.pop_back();
      else out.push_back(g);
    }
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) ++lo, --hi;
    w.assign(out.begin() + lo, out.begin() + hi);
  }

  static char enc(int g) { return g > 0 ? char('A' + g) : char('a' - g); }
  static int dec(char c) { return c >= 'a' ? -(c - 'a') : c - 'A'; }

  // Least rotation of w and of w^-1.
  static std::string canonical_key(const Letters& w) {
    std::string s, t;
    for (int g : w) s += enc(g);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t += enc(-*it);
    std::string best = s;
    for (const std::string* src : {&s, &t})
      for (std::size_t r = 0; r < src->size(); ++r) {
        std::string cand = src->substr(r) + src->substr(0, r);
        if (cand < best) best = std::move(cand);
      }
    return best;
  }

  static Letters from_key(const std::string& k) {
    Letters w;
    for (char c : k) w.push_back(dec(c));
    return w;
  }

  static Letters cat(std::initializer_list<Letters> parts) {
    Letters r;
    for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
  }

  static Letters inv(const Letters& w) {
    Letters r(w.rbegin(), w.rend());
    for (int& g : r) g = -g;
    return r;
  }

  Polynomial compute(const Letters& w) {
    const std::size_t n = w.size();
    // (i) tr(A x^-1 B) = tr(x) tr(AB) - tr(A x B)
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] < 0) {
        Letters A(w.begin(), w.begin() + i), B(w.begin() + i + 1, w.end());
        int g = -w[i];
        return var(g) * trace(cat({A, B})) - trace(cat({A, {g}, B}));
      }
    // (ii) x^2 = tr(x) x - I, cyclically
    for (std::size_t i = 0; i < n && n >= 2; ++i)
      if (w[i] == w[(i + 1) % n]) {
        Letters B;
        for (std::size_t k = 2; k < n; ++k) B.push_back(w[(i + k) % n]);
        int g = w[i];
        return var(g) * trace(cat({{g}, B})) - trace(B);
      }
    // (iii) base cases
    if (n == 1) return var(w[0]);
    if (n == 2) {
      if (rank_ == 2) return var(3);
      int i = std::min(w[0], w[1]), j = std::max(w[0], w[1]);
      static const char* names[4][4] = {{}, {nullptr, nullptr, "x12", "x13"}, {nullptr, nullptr, nullptr, "x23"}};
      return Polynomial::variable(vars_, names[i][j]);
    }
    if (n == 3 && rank_ == 3) {
      // all distinct; X1X2X3 or X1X3X2 up to rotation
      std::size_t p = std::find(w.begin(), w.end(), 1) - w.begin();
      Polynomial t123 = Polynomial::variable(vars_, "x123");
      if (w[(p + 1) % 3] == 2) return t123;
      return f3_sum() - t123;
    }
    // (iv) split at the earliest repeated letter, shortest left factor:
    // tr(g A g B) = tr(gA) tr(gB) - tr(A B^-1)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (w[j] == w[i]) {
          Letters A(w.begin() + i + 1, w.begin() + j);
          Letters B(w.begin() + j + 1, w.end());
          B.insert(B.end(), w.begin(), w.begin() + i);
          int g = w[i];
          return trace(cat({{g}, A})) * trace(cat({{g}, B})) - trace(cat({A, inv(B)}));
        }
    throw std::logic_error("trace engine: no reduction applies");
  }

  int rank_;
  VariableSet vars_;
  std::unordered_map<std::string, Polynomial> memo_;
};

Engine& engine(int rank) {
  thread_local Engine e1(1), e2(2), e3(3);
  switch (rank) {
    case 1: return e1;
    case 2: return e2;
    case 3: return e3;
    default: throw UsageError("trace polynomials are available for rank 1..3 only");
  }
}

Letters letters_of(const Word& w) {
  Letters l;
  for (const Gen& g : w.letters()) l.push_back(g.inverted ? -g.index : g.index);
  return l;
}

}  // namespace

Polynomial trace_poly(const Word& w) { return engine(w.rank()).trace(letters_of(w)); }

Polynomial trace_poly_f2(const Word& w) {
  if (w.rank() != 2) throw UsageError("trace_poly_f2 expects a rank-2 word");
  return trace_poly(w);
}

Polynomial trace_poly_f3(const Word& w) {
  if (w.rank() != 3) throw UsageError("trace_poly_f3 expects a rank-3 word");
  return trace_poly(w);
}

std::size_t trace_memo_size(int rank) { return engine(rank).memo_size(); }

std::vector<cplx> trace_coordinates(const std::vector<Mat2C>& g) {
  switch (g.size()) {
    case 1: return {g[0].trace()};
    case 2: return {g[0].trace(), g[1].trace(), (g[0] * g[1]).trace()};
    case 3:
      return {g[0].trace(),           g[1].trace(),           g[2].trace(),
              (g[0] * g[1]).trace(),  (g[0] * g[2]).trace(),  (g[1] * g[2]).trace(),
              (g[0] * g[1] * g[2]).trace()};
    default: throw UsageError("trace_coordinates: rank 1..3 only");
  }
}

const Polynomial& kappa() {
  static const Polynomial k = Polynomial::parse(vars_f2(), "x^2 + y^2 + z^2 - x*y*z - 2");
  return k;
}

const Polynomial& phi_polynomial() { return phi_f3(); }

std::pair<Polynomial, Polynomial> sum_product_relation_polys() {
  return {f3_sum(), f3_product()};
}

double quadruple_trace_check(const std::array<Mat2C, 4>& m) {
  auto t = [&](std::initializer_list<int> idx) {
    Mat2C p;
    for (int i : idx) p = p * m[i - 1];
    return p.trace();
  };
  cplx t1 = t({1}), t2 = t({2}), t3 = t({3}), t4 = t({4});
  cplx t12 = t({1, 2}), t13 = t({1, 3}), t23 = t({2, 3}), t24 = t({2, 4}), t34 = t({3, 4}),
       t41 = t({4, 1});
  cplx t123 = t({1, 2, 3}), t234 = t({2, 3, 4}), t341 = t({3, 4, 1}), t412 = t({4, 1, 2});
  cplx t1234 = t({1, 2, 3, 4});
  cplx rhs = t1 * t2 * t3 * t4 + t1 * t234 + t2 * t341 + t3 * t412 + t4 * t123 + t12 * t34 +
             t41 * t23 - t13 * t24 - t1 * t2 * t34 - t12 * t3 * t4 - t4 * t1 * t23 -
             t41 * t2 * t3;
  return std::abs(2.0 * t1234 - rhs);
}

long long generator_count(int n) {
  if (n < 1) throw UsageError("generator_count: n must be >= 1");
  long long N = n;
  return N * (5 + N * N) / 6;
}

}  // namespace chv
