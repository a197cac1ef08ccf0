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

#ifndef SOCA_POLYNOMIAL_HPP
#define SOCA_POLYNOMIAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "soca/field.hpp"

namespace soca {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/**
 * Univariate polynomial over F_q with coefficients in ascending degree order,
 * i.e. coeffs()[i] multiplies X^i. Always normalized: the last stored coefficient
 * is nonzero and the zero polynomial stores nothing.
 */
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(const Field& field) : field_(field) {}
    Polynomial(const Field& field, std::vector<Element> coeffs);

    static Polynomial constant(const Field& field, Element c);
    static Polynomial monomial(const Field& field, Element c, std::size_t degree);
    /// X^n - 1.
    static Polynomial x_pow_minus_one(const Field& field, std::size_t n);

    /**
     * Parses "1+x^2+x^3" style text (case-insensitive, terms in any order, coefficients
     * written "c*x^i" or "cx^i" with c an element index) or, over GF(2), a compact
     * ascending coefficient string such as "1101".
     */
    static Polynomial parse(const Field& field, std::string_view text);

    const Field& field() const noexcept { return field_; }
    std::span<const Element> coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    Element coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Element leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    /// Number of nonzero coefficients.
    std::size_t weight() const noexcept;

    /// Canonical text, e.g. "1+X+X^2" or "2+2*X^3"; "0" for the zero polynomial.
    std::string to_string() const;
    /// Ascending 0/1 string ("1101"); GF(2) only.
    std::string to_coefficient_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    void normalize();

    Field field_;
    std::vector<Element> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, Element c);

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// a = quotient*b + remainder with deg remainder < deg b. Throws DomainError when b = 0.
DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Scales a to leading coefficient 1; the zero polynomial is returned unchanged.
Polynomial monic(const Polynomial& a);

/// Monic gcd by Euclid's algorithm. gcd(0, 0) throws DomainError.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Horner evaluation.
Element eval(const Polynomial& a, Element x);

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m);
Polynomial powmod(const Polynomial& a, std::uint64_t e, const Polynomial& m);

/**
 * Rabin's test: a of degree m is irreducible iff X^{q^m} = X mod a and
 * gcd(X^{q^{m/r}} - X, a) = 1 for every prime r dividing m.
 * Throws PreconditionError for constants.
 */
bool is_irreducible(const Polynomial& a);

/**
 * All monic irreducible polynomials of degree m by exhaustive trial division, in
 * enumeration order (coefficient vector read as a radix-q integer, constant term least
 * significant). Requires 1 <= m <= 10 and q^m <= 2^20.
 */
std::vector<Polynomial> irreducibles_of_degree(const Field& field, int m);

/**
 * Monic irreducible factors of a with multiplicity, in nondecreasing degree, by trial
 * division. The leading coefficient is dropped. Requires q^{deg(a)/2} <= 2^20.
 */
std::vector<Polynomial> factor(const Polynomial& a);

}  // namespace soca

#endif
