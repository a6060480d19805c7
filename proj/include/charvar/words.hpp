// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chv {

struct Gen {
  int index = 1;  // 1-based
  bool inverted = false;
  Gen inv() const { return {index, !inverted}; }
  bool operator==(const Gen&) const = default;
};

// A word in the free group of the given rank. Constructors reduce freely,
// so every Word value is reduced.
class Word {
 public:
  explicit Word(int rank = 2) : rank_(rank) {}
  Word(int rank, std::vector<Gen> letters);

  int rank() const { return rank_; }
  const std::vector<Gen>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Gen& operator[](std::size_t i) const { return letters_[i]; }

  bool operator==(const Word&) const = default;

  // Indexed form, e.g. "X1 X2^-1 X3"; identity prints as "1".
  std::string str() const;
  // Compact letter form (rank <= 3 only), e.g. "XYxy".
  std::string compact() const;

 private:
  int rank_;
  std::vector<Gen> letters_;
};

Word parse_word(std::string_view text, int rank);
Word reduce(const Word& w);
Word multiply(const Word& a, const Word& b);
Word invert(const Word& w);
Word power(const Word& w, int k);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w = conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& w);

// Convenience: generator k (1-based) of a rank-n free group.
Word gen(int rank, int k);

}  // namespace chv
