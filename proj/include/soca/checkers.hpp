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

#ifndef SOCA_CHECKERS_HPP
#define SOCA_CHECKERS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "soca/latin_square.hpp"
#include "soca/polynomial.hpp"
#include "soca/rule.hpp"

namespace soca {

/**
 * Ways of deciding whether a bipermutive CA is self-orthogonal.
 *
 *  - Bruteforce: build the Cayley table and superpose it with its transpose.
 *  - StackedMatrix: the transition matrix of F stacked on that of F^T is invertible.
 *  - GcdGeneral: gcd(p_f, X^{2(d-1)} - 1) = 1.
 *  - GcdBinary: gcd(p_f, X^{d-1} + 1) = 1 (characteristic 2).
 *  - Parity: p_f(1) != 0 (characteristic 2, d - 1 a power of two).
 *  - IrreducibleSufficient: p_f irreducible implies self-orthogonal (characteristic 2, d > 2).
 */
enum class Method { Bruteforce, StackedMatrix, GcdGeneral, GcdBinary, Parity, IrreducibleSufficient };

std::string_view method_name(Method method) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// Negative verdicts always carry a certificate: a nontrivial common factor, or two cells
/// of the Cayley table whose superposed pairs coincide.
struct SocaVerdict {
    bool verdict = false;
    Method method = Method::Bruteforce;
    std::optional<Polynomial> gcd;
    std::optional<std::pair<Cell, Cell>> cells;
    std::string note;
};

SocaVerdict soca_bruteforce(const LocalRule& rule);
SocaVerdict soca_stacked_matrix(const LinearRule& rule);
SocaVerdict soca_linear_fast(const LinearRule& rule);
SocaVerdict soca_binary_fast(const LinearRule& rule);
SocaVerdict soca_parity(const LinearRule& rule);
/// A verdict only when p_f is irreducible; the condition is sufficient, not necessary.
std::optional<SocaVerdict> irreducible_implies_soca(const LinearRule& rule);

/// Runs one method. Linear methods accept affine rules (see audit()).
SocaVerdict soca_check(const LocalRule& rule, Method method);
SocaVerdict soca_check(const LinearRule& rule, Method method);

/// Invertibility of the n x n circulant PBCA transition matrix, via gcd(p_f, X^n - 1).
bool pbca_invertible(const LinearRule& rule, std::size_t n);

enum class PairMode { Fast, Bruteforce };

/// Orthogonality of the Latin squares of two linear bipermutive CA of the same diameter.
bool oca_pair_check(const LinearRule& a, const LinearRule& b, PairMode mode);

struct AuditReport {
    bool verdict = false;
    std::vector<SocaVerdict> log;       // one entry per method run, in a fixed order
    std::vector<std::string> skipped;   // methods not applicable, with reasons
};

/**
 * Runs every applicable method and requires them to agree. Affine rules are checked
 * through their linear part: adding a constant relabels the symbols of the Cayley table,
 * which preserves self-orthogonality. Disagreement throws ConsistencyError.
 */
AuditReport audit(const LocalRule& rule);

}  // namespace soca

#endif
