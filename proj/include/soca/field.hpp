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

#ifndef SOCA_FIELD_HPP
#define SOCA_FIELD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace soca {

/// Field elements are dense indices 0..q-1. For GF(2^k) the bits of the index are
/// the coefficients of the polynomial residue, bit 0 being the constant term.
using Element = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// The alphabet F_q: either a prime field GF(p) or a binary extension GF(2^k).
///
/// Immutable after construction; all arithmetic is const and thread-safe.
class Field {
   public:
    /// GF(2).
    Field() noexcept : p_(2), k_(1), q_(2), modulus_(0) {}

    /**
     * Validating constructor.
     *
     * `modulus` lists the coefficients of a degree-k irreducible polynomial over F_p in
     * ascending order; it is ignored for k = 1. When k > 1 and no modulus is supplied the
     * built-in default for that degree is used.
     */
    static Field make(std::uint32_t p, std::uint32_t k = 1,
                      std::optional<std::vector<Element>> modulus = std::nullopt);

    /// Parses "GF(q)", "GF(p^k)" or "GF(2^k)/<ascending coefficient string>".
    static Field parse(std::string_view descriptor);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return k_; }
    std::uint32_t order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return k_ == 1; }
    bool is_binary() const noexcept { return q_ == 2; }

    /// Ascending modulus coefficients (length k+1); empty for prime fields.
    std::vector<Element> modulus() const;

    /// Canonical descriptor, accepted back by parse(). Extension fields always echo their modulus.
    std::string descriptor() const;

    bool contains(Element a) const noexcept { return a < q_; }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;  // throws DomainError on 0
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const;

    friend bool operator==(const Field&, const Field&) = default;

   private:
    Field(std::uint32_t p, std::uint32_t k, std::uint32_t modulus) noexcept
        : p_(p), k_(k), q_(1), modulus_(modulus) {
        for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
    }

    void check(Element a) const;

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::uint32_t modulus_;  // bit-packed modulus for GF(2^k), leading bit included; 0 for k = 1
};

/// Built-in default modulus for GF(2^k), 1 <= k <= 16, bit-packed with bit i = coeff of X^i.
/// The list holds the numerically smallest irreducible polynomial of each degree.
std::uint32_t default_binary_modulus(std::uint32_t k);

/// Deterministic primality test for the field-size range.
bool is_prime(std::uint32_t n) noexcept;

/// Carry-less product of two packed GF(2)[X] polynomials (operands below 2^32).
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace soca

#endif
