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

#include "soca/stacked.hpp"

#include "soca/errors.hpp"

namespace soca {

namespace {

std::size_t half_width(const LinearRule& rule) {
    if (rule.diameter() < 2) throw PreconditionError("stacked matrices need diameter d >= 2");
    return static_cast<std::size_t>(rule.diameter() - 1);
}

}  // namespace

Matrix swap_permutation_matrix(const Field& field, std::size_t n) {
    if (n % 2) throw PreconditionError("the swap permutation needs an even length");
    const std::size_t h = n / 2;
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < h; ++i) {
        m.set(i, h + i, 1);
        m.set(h + i, i, 1);
    }
    return m;
}

Matrix transpose_ca_matrix(const LinearRule& rule) {
    const std::size_t m = half_width(rule);
    const Matrix forward = transition_matrix(rule, 2 * m);
    Matrix out(rule.field(), m, 2 * m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < 2 * m; ++c) out.set(r, c, forward(r, (c + m) % (2 * m)));
    return out;
}

Matrix stacked_matrix(const LinearRule& rule) {
    const std::size_t m = half_width(rule);
    const Matrix top = transition_matrix(rule, 2 * m);
    const Matrix bottom = transpose_ca_matrix(rule);
    Matrix out(rule.field(), 2 * m, 2 * m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < 2 * m; ++c) {
            out.set(r, c, top(r, c));
            out.set(m + r, c, bottom(r, c));
        }
    return out;
}

Circulant circulant_of_stacked(const LinearRule& rule) {
    auto circulant = as_circulant(stacked_matrix(rule));
    if (!circulant) throw ConsistencyError("stacked matrix of " + rule.to_string() + " is not circulant");
    return *circulant;
}

Circulant pbca_transition_circulant(const LinearRule& rule, std::size_t n) {
    const auto d = static_cast<std::size_t>(rule.diameter());
    if (n < d) throw PreconditionError("PBCA length must be at least the diameter");
    std::vector<Element> row(n, 0);
    for (std::size_t i = 0; i < d; ++i) row[i] = rule.coeffs()[i];
    return Circulant(rule.field(), std::move(row));
}

}  // namespace soca
