// SPDX-License-Identifier: Apache-2.0
#include "charvar/rng.hpp"

#include <cmath>

namespace chv {

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(index),
                    std::uint32_t(index >> 32)};
  Rng r(0);
  r.gen_.seed(seq);
  return r;
}

Mat2C Rng::unimodular() {
  while (true) {
    cplx a = complex_box(), b = complex_box(), c = complex_box();
    if (std::abs(a) < 1e-3) continue;
    return Mat2C{a, b, c, (1.0 + b * c) / a};
  }
}

Mat2C Rng::real_unimodular() {
  while (true) {
    double a = uniform(-2, 2), b = uniform(-2, 2), c = uniform(-2, 2);
    if (std::abs(a) < 1e-3) continue;
    return Mat2C{a, b, c, (1.0 + b * c) / a};
  }
}

Word Rng::word(int rank, int max_len) {
  int n = integer(0, max_len);
  std::vector<Gen> g;
  for (int i = 0; i < n; ++i) g.push_back(Gen{integer(1, rank), integer(0, 1) == 1});
  return Word(rank, std::move(g));
}

}  // namespace chv
