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

#ifndef SOCA_SEARCH_HPP
#define SOCA_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "soca/polynomial.hpp"
#include "soca/rule.hpp"

namespace soca {

struct ScanOptions {
    unsigned workers = 1;
    /// Lifts the desk-scale guards (2^16 rules per scan, d <= 24 for linear counts).
    bool override_guard = false;
};

/// Result of a brute-force scan over every bipermutive rule of one diameter.
struct ScanReport {
    int diameter = 0;
    Field field;
    std::uint64_t n_bipermutive = 0;
    std::uint64_t n_soca = 0;
    std::uint64_t n_affine_soca = 0;  // affine rules, i.e. linear ones and their shifts by a constant
    std::uint64_t n_linear_soca = 0;  // zero constant term
    std::uint64_t n_nonlinear_soca = 0;
    /// Associated polynomials of the strictly linear SOCA, in canonical order.
    std::vector<Polynomial> polynomials;
    /// Enumeration indices of nonlinear SOCA.
    std::vector<std::uint64_t> nonlinear_indices;
    double elapsed_seconds = 0.0;
};

struct LinearCountReport {
    Field field;
    std::vector<std::pair<int, std::uint64_t>> counts;  // (d, number of strictly linear SOCA)
    std::string method;
};

/// Number of Latin squares of order q; the per-middle choices of a bipermutive rule.
std::uint64_t latin_square_count(std::uint32_t q);

/// Number of bipermutive rules of diameter d over the field (2^{2^{d-2}} over GF(2)).
/// Saturates at UINT64_MAX.
std::uint64_t bipermutive_rule_count(const Field& field, int diameter);

/**
 * The bipermutive rule with the given enumeration index. For each assignment of the
 * central d-2 cells the restriction to (x_1, x_d) is a Latin square of order q; the index
 * is the mixed-radix number of those choices, the first middle assignment least
 * significant. Over GF(2) this is f = x_1 + g(x_2..x_{d-1}) + x_d with the index equal to
 * the truth table of g.
 */
LocalRule bipermutive_rule(const Field& field, int diameter, std::uint64_t index);

/// Streams every bipermutive binary rule of diameter d in increasing g order. 3 <= d <= 6.
void enumerate_bipermutive_binary(int diameter, const std::function<void(std::uint64_t, const LocalRule&)>& visit);

/// Brute-force self-orthogonality scan of every bipermutive rule of diameter d.
ScanReport scan_soca(int diameter, const Field& field = Field(), ScanOptions options = {});

/// Counts strictly linear bipermutive rules (a_1, a_d nonzero) passing the gcd test.
LinearCountReport count_linear_soca(int d_min, int d_max, const Field& field = Field(), ScanOptions options = {});

/// Bipermutive SOCA rules that are not affine.
std::vector<LocalRule> find_nonlinear_soca(int diameter, const Field& field = Field(), ScanOptions options = {});

/// Canonical order: fewer nonzero terms first, then by ascending exponent sequence.
void sort_canonical(std::vector<Polynomial>& polys);

}  // namespace soca

#endif
