/*
   Copyright 2026 The soca-kit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Matrices of a linear NBCA F: F_q^{2(d-1)} -> F_q^{d-1} and of its transpose
// F^T(x||y) = F(y||x), and the square matrix obtained by stacking them.

#ifndef SOCA_STACKED_HPP
#define SOCA_STACKED_HPP

#include "soca/matrix.hpp"
#include "soca/rule.hpp"

namespace soca {

/// n x n block swap exchanging the two halves of a length-n vector. n must be even.
Matrix swap_permutation_matrix(const Field& field, std::size_t n);

/// (d-1) x 2(d-1) matrix of F^T, computed in closed form (the two column halves of the
/// transition matrix exchanged).
Matrix transpose_ca_matrix(const LinearRule& rule);

/// transition_matrix(rule, 2(d-1)) stacked on transpose_ca_matrix(rule). Requires d >= 2.
Matrix stacked_matrix(const LinearRule& rule);

/**
 * Reads the stacked matrix as a circulant. Its first row is (a_1, ..., a_d, 0, ..., 0), so
 * the associated polynomial is p_f. Throws ConsistencyError if the circulant structure is
 * violated.
 */
Circulant circulant_of_stacked(const LinearRule& rule);

/// n x n circulant transition matrix of the periodic-boundary CA. Requires n >= d.
Circulant pbca_transition_circulant(const LinearRule& rule, std::size_t n);

}  // namespace soca

#endif
