// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "charvar/error.hpp"
#include "charvar/rng.hpp"
#include "charvar/words.hpp"

using namespace chv;

TEST_CASE("parse: compact and indexed notations") {
  Word w = parse_word("X Y", 2);
  CHECK(w.size() == 2);
  CHECK(w.str() == "X1 X2");
  CHECK(parse_word("X x", 2).empty());
  CHECK(parse_word("X1 X2^-1 X3", 3).str() == "X1 X2^-1 X3");
  CHECK(parse_word("XYxy", 2) == parse_word("X1 X2 X1^-1 X2^-1", 2));
  CHECK(parse_word("UVuv", 2) == parse_word("PQpq", 2));
  CHECK(parse_word("X^3", 2).size() == 3);
  CHECK(parse_word("Y^-2", 2) == parse_word("yy", 2));
  CHECK(parse_word("1", 2).empty());
  CHECK(parse_word("", 3).empty());
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_AS(parse_word("X Z", 2), UsageError);
  CHECK_THROWS_AS(parse_word("X4", 3), UsageError);
  CHECK_THROWS_AS(parse_word("X ? Y", 2), UsageError);
  CHECK_THROWS_AS(parse_word("X^", 2), UsageError);
  try {
    parse_word("XY#", 2);
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
}

TEST_CASE("reduce") {
  CHECK(parse_word("X Y y X", 2) == parse_word("X X", 2));
  CHECK(reduce(Word(2)).empty());
  CHECK(parse_word("X y Y x", 2).empty());
}

TEST_CASE("cyclic_reduce") {
  auto r = cyclic_reduce(parse_word("x Y X", 2));
  CHECK(r.core == parse_word("Y", 2));
  CHECK(r.conjugator == parse_word("x", 2));
  auto c = cyclic_reduce(parse_word("XYxy", 2));
  CHECK(c.core == parse_word("XYxy", 2));
  CHECK(c.conjugator.empty());
  Word w = parse_word("y x Y X Y", 2);
  auto d = cyclic_reduce(w);
  CHECK(multiply(multiply(d.conjugator, d.core), invert(d.conjugator)) == w);
  CHECK(d.core == parse_word("Y", 2));
  CHECK(d.conjugator == parse_word("y x", 2));
}

TEST_CASE("multiply / invert") {
  CHECK(multiply(parse_word("X", 2), parse_word("x", 2)).empty());
  CHECK(invert(parse_word("XY", 2)) == parse_word("y x", 2));
  CHECK(multiply(parse_word("XY", 3), parse_word("yZ", 3)) == parse_word("XZ", 3));
  CHECK_THROWS_AS(multiply(parse_word("X", 2), parse_word("X", 3)), UsageError);
}

TEST_CASE("properties on random words") {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    int rank = rng.integer(1, 4);
    Word w = rng.word(rank, 16);
    CHECK(multiply(w, invert(w)).empty());
    CHECK(reduce(reduce(w)) == reduce(w));
    CHECK(reduce(w).size() <= w.size());
    auto cr = cyclic_reduce(w);
    if (cr.core.size() >= 2) CHECK_FALSE(cr.core[0] == cr.core[cr.core.size() - 1].inv());
    CHECK(multiply(multiply(cr.conjugator, cr.core), invert(cr.conjugator)) == w);
    CHECK(parse_word(w.str(), rank) == w);
  }
}
