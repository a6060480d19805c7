// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "charvar/mat2.hpp"
#include "charvar/words.hpp"

namespace chv {

// Deterministic source for oracles and suites. Streams for trial k are
// derived from (seed, k) so results do not depend on scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  cplx complex_box(double r = 2.0) { return {uniform(-r, r), uniform(-r, r)}; }

  // Entries uniform in [-2,2]^2 (or [-2,2] when real); d solved for det 1;
  // draws with |a| < 1e-3 are rejected.
  Mat2C unimodular();
  Mat2C real_unimodular();
  // Word with length uniform in [0, max_len] before free reduction.
  Word word(int rank, int max_len);

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace chv
