// SPDX-License-Identifier: Apache-2.0
#include "charvar/words.hpp"

#include <algorithm>
#include <cctype>

#include "charvar/error.hpp"

namespace chv {

namespace {

// Letter -> generator index for the compact notation.
int letter_index(char up) {
  switch (up) {
    case 'X': case 'U': case 'A': case 'P': return 1;
    case 'Y': case 'V': case 'B': case 'Q': return 2;
    case 'Z': case 'W': case 'C': return 3;
    case 'D': return 4;
    default: return 0;
  }
}

void push_reduced(std::vector<Gen>& out, Gen g) {
  if (!out.empty() && out.back() == g.inv())
    out.pop_back();
  else
    out.push_back(g);
}

[[noreturn]] void syntax(std::string_view text, std::size_t pos, const std::string& what) {
  throw UsageError("word syntax error at position " + std::to_string(pos) + " in \"" +
                   std::string(text) + "\": " + what);
}

}  // namespace

Word::Word(int rank, std::vector<Gen> letters) : rank_(rank) {
  if (rank < 1) throw UsageError("word rank must be >= 1");
  for (const Gen& g : letters) {
    if (g.index < 1 || g.index > rank)
      throw UsageError("generator index " + std::to_string(g.index) + " exceeds rank " +
                       std::to_string(rank));
    push_reduced(letters_, g);
  }
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += 'X';
    s += std::to_string(letters_[i].index);
    if (letters_[i].inverted) s += "^-1";
  }
  return s;
}

std::string Word::compact() const {
  static const char up[] = "XYZD";
  if (rank_ > 4) return str();
  std::string s;
  for (const Gen& g : letters_) {
    char c = up[g.index - 1];
    s += g.inverted ? char(std::tolower(c)) : c;
  }
  return s.empty() ? "1" : s;
}

Word parse_word(std::string_view text, int rank) {
  std::vector<Gen> out;
  std::size_t i = 0, n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace((unsigned char)text[i])) ++i; };
  auto read_int = [&](std::size_t at) {
    std::size_t j = i;
    while (i < n && std::isdigit((unsigned char)text[i])) ++i;
    if (j == i) syntax(text, at, "expected integer");
    return std::stoi(std::string(text.substr(j, i - j)));
  };
  while (true) {
    skip_ws();
    if (i >= n) break;
    std::size_t at = i;
    char c = text[i];
    if (c == '1' && (i + 1 == n || !std::isdigit((unsigned char)text[i + 1]))) {
      ++i;  // explicit identity
      continue;
    }
    char up = char(std::toupper((unsigned char)c));
    int idx = letter_index(up);
    if (!idx) syntax(text, at, std::string("unexpected character '") + c + "'");
    bool inv = std::islower((unsigned char)c);
    ++i;
    if (up == 'X' && i < n && std::isdigit((unsigned char)text[i])) idx = read_int(at);
    if (idx < 1 || idx > rank)
      throw UsageError("generator index " + std::to_string(idx) + " exceeds rank " +
                       std::to_string(rank) + " at position " + std::to_string(at));
    int pw = 1;
    if (i < n && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
      pw = read_int(at);
      if (neg) pw = -pw;
    }
    if (pw < 0) inv = !inv, pw = -pw;
    for (int k = 0; k < pw; ++k) push_reduced(out, Gen{idx, inv});
  }
  return Word(rank, std::move(out));
}

Word reduce(const Word& w) { return Word(w.rank(), w.letters()); }

Word multiply(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) throw UsageError("rank mismatch in multiply");
  std::vector<Gen> v = a.letters();
  v.insert(v.end(), b.letters().begin(), b.letters().end());
  return Word(a.rank(), std::move(v));
}

Word invert(const Word& w) {
  std::vector<Gen> v;
  v.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) v.push_back(it->inv());
  return Word(w.rank(), std::move(v));
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? invert(w) : w, r(w.rank());
  for (int i = 0; i < std::abs(k); ++i) r = multiply(r, base);
  return r;
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& L = w.letters();
  std::size_t lo = 0, hi = L.size();
  while (hi - lo >= 2 && L[lo] == L[hi - 1].inv()) ++lo, --hi;
  std::vector<Gen> core(L.begin() + lo, L.begin() + hi);
  std::vector<Gen> conj(L.begin(), L.begin() + lo);
  return {Word(w.rank(), std::move(core)), Word(w.rank(), std::move(conj))};
}

Word gen(int rank, int k) { return Word(rank, {Gen{k, false}}); }

}  // namespace chv
