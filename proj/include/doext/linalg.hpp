// Copyright 2026 The doext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOEXT_LINALG_HPP_
#define DOEXT_LINALG_HPP_

#include <cstddef>
#include <vector>

#include "doext/param_field.hpp"

namespace doext {

using ScalarVector = std::vector<ParamScalar>;
using ScalarMatrix = std::vector<ScalarVector>;

struct Echelon {
  ScalarMatrix rows;                // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row, increasing
  std::size_t rank() const { return pivots.size(); }
};

// Fraction-free (Bareiss-style) forward elimination. Pivot columns are taken
// left to right; within a column the entry of least weight is the pivot.
Echelon row_echelon(ScalarMatrix m, std::size_t ncols);

std::size_t matrix_rank(ScalarMatrix m, std::size_t ncols);

// One vector per free column, normalized to 1 there and 0 at the other free
// columns, then scaled to polynomial entries with content 1.
std::vector<ScalarVector> kernel_basis(ScalarMatrix m, std::size_t ncols);

// Scales v by a nonzero field element so that all entries are polynomials
// with integer coefficients, no common factor, and a positive leading
// coefficient in the first nonzero entry.
ScalarVector clear_denominators(ScalarVector v);

}  // namespace doext

#endif  // DOEXT_LINALG_HPP_
