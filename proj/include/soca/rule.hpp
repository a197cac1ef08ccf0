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

#ifndef SOCA_RULE_HPP
#define SOCA_RULE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "soca/field.hpp"
#include "soca/matrix.hpp"
#include "soca/polynomial.hpp"

namespace soca {

using Configuration = std::vector<Element>;

/// Largest diameter for a binary lookup-table rule; general q is capped at the same table size.
inline constexpr int kMaxTableDiameter = 24;

/**
 * Local rule f: F_q^d -> F_q stored as a lookup table of q^d outputs.
 *
 * The neighborhood (x_1, ..., x_d) indexes the table as a radix-q integer with x_1 the most
 * significant digit. Over GF(2) the table is the output string of the rule over
 * lexicographically ordered neighborhoods and its big-endian value is the Wolfram code.
 */
class LocalRule {
   public:
    LocalRule(const Field& field, int diameter, std::vector<Element> table);

    const Field& field() const noexcept { return field_; }
    int diameter() const noexcept { return diameter_; }
    std::span<const Element> table() const noexcept { return table_; }

    Element at(std::size_t index) const noexcept { return table_[index]; }
    Element operator()(std::span<const Element> neighborhood) const;

    /// Decimal Wolfram code; GF(2) only.
    std::string wolfram_code() const;
    /// Wolfram code in lowercase hex without prefix; GF(2) only.
    std::string wolfram_hex() const;

    friend bool operator==(const LocalRule&, const LocalRule&) = default;

   private:
    Field field_;
    int diameter_;
    std::vector<Element> table_;
};

/// f(x_1, ..., x_d) = a_1 x_1 + ... + a_d x_d.
class LinearRule {
   public:
    LinearRule(const Field& field, std::vector<Element> coeffs);

    /// Parses "1,1,1" or "linear:1,1,1".
    static LinearRule parse(const Field& field, std::string_view text);

    const Field& field() const noexcept { return field_; }
    int diameter() const noexcept { return static_cast<int>(coeffs_.size()); }
    std::span<const Element> coeffs() const noexcept { return coeffs_; }
    bool is_bipermutive() const noexcept { return coeffs_.front() != 0 && coeffs_.back() != 0; }

    Element operator()(std::span<const Element> neighborhood) const;

    /// "linear:a_1,...,a_d".
    std::string to_string() const;

    friend bool operator==(const LinearRule&, const LinearRule&) = default;

   private:
    Field field_;
    std::vector<Element> coeffs_;
};

struct AffineRule {
    LinearRule linear;
    Element constant;
};

/// Algebraic normal form of a Boolean rule. coeffs[u] is a_u where the monomial u uses the
/// same bit layout as the truth table (x_1 is the most significant bit).
struct AnfForm {
    int diameter = 0;
    std::vector<std::uint8_t> coeffs;

    int degree() const noexcept;  // -1 for the zero function
    std::uint8_t constant() const noexcept { return coeffs.empty() ? 0 : coeffs[0]; }
    /// Monomials joined by "+", e.g. "x1+x2x3+x4"; "0" when empty.
    std::string to_string() const;
};

LocalRule rule_from_wolfram(std::uint64_t code, int diameter);
/// Decimal string, or hexadecimal with a "0x" prefix.
LocalRule rule_from_wolfram(std::string_view code, int diameter);
LocalRule rule_from_linear(const LinearRule& rule);

/// Coordinate is 1-based.
bool is_permutive(const LocalRule& rule, int coordinate);
bool is_bipermutive(const LocalRule& rule);

/// Fast Mobius transform of the truth table; GF(2) only.
AnfForm anf(const LocalRule& rule);
LocalRule rule_from_anf(const AnfForm& form);

std::optional<LinearRule> as_linear(const LocalRule& rule);
std::optional<AffineRule> as_affine(const LocalRule& rule);

/// Flips every output bit; GF(2) only.
LocalRule complement(const LocalRule& rule);

/// No-boundary CA: output length n - d + 1.
Configuration nbca_eval(const LocalRule& rule, std::span<const Element> x);
/// Periodic-boundary CA: output_i = f(x_i, x_{i+1 mod n}, ..., x_{i+d-1 mod n}).
Configuration pbca_eval(const LocalRule& rule, std::span<const Element> x);

/// p_f(X) = a_1 + a_2 X + ... + a_d X^{d-1}.
Polynomial associated_polynomial(const LinearRule& rule);

/// (n-d+1) x n matrix whose row i carries a_1..a_d at columns i..i+d-1.
Matrix transition_matrix(const LinearRule& rule, std::size_t n);

}  // namespace soca

#endif
