// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "charvar/mat2.hpp"
#include "charvar/polyring.hpp"
#include "charvar/words.hpp"

namespace chv {

// Trace polynomial of a word of rank 1, 2 or 3.
//   rank 1: in {x}
//   rank 2: in {x, y, z} (z = tr XY)
//   rank 3: in the seven F3 coordinates, reduced mod phi
Polynomial trace_poly(const Word& w);
Polynomial trace_poly_f2(const Word& w);
Polynomial trace_poly_f3(const Word& w);

const VariableSet& vars_f1();  // x
const VariableSet& vars_for_rank(int rank);

// Character coordinates of generator matrices, in the variable order of
// vars_for_rank(rank): the values at which trace polynomials are evaluated.
std::vector<cplx> trace_coordinates(const std::vector<Mat2C>& gens);

const Polynomial& kappa();           // x^2 + y^2 + z^2 - x y z - 2
const Polynomial& phi_polynomial();  // = phi_f3()
std::pair<Polynomial, Polynomial> sum_product_relation_polys();

// Residual of the quadruple-trace identity computed from four matrices.
double quadruple_trace_check(const std::array<Mat2C, 4>& m);

long long generator_count(int n);

// Memo statistics (thread-local engine).
std::size_t trace_memo_size(int rank);

}  // namespace chv
