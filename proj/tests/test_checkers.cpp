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

#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "soca/checkers.hpp"
#include "soca/errors.hpp"
#include "soca/search.hpp"

using namespace soca;

namespace {

// Every linear rule over f with nonzero end coefficients and diameter d.
std::vector<LinearRule> linear_bipermutive(const Field& f, int d) {
    const std::uint32_t q = f.order();
    std::uint64_t middles = 1;
    for (int i = 0; i < d - 2; ++i) middles *= q;
    std::vector<LinearRule> out;
    for (Element a1 = 1; a1 < q; ++a1)
        for (Element ad = 1; ad < q; ++ad)
            for (std::uint64_t mid = 0; mid < middles; ++mid) {
                std::vector<Element> a(static_cast<std::size_t>(d));
                a.front() = a1;
                a.back() = ad;
                std::uint64_t k = mid;
                for (int i = 1; i + 1 < d; ++i, k /= q) a[static_cast<std::size_t>(i)] = static_cast<Element>(k % q);
                out.emplace_back(f, a);
            }
    return out;
}

void check_cells_certificate(const LocalRule& rule, const SocaVerdict& v) {
    REQUIRE(v.cells);
    const LatinSquare sq = cayley_table(rule);
    const auto [a, b] = *v.cells;
    CHECK(a != b);
    CHECK(sq.at(a.row, a.col) == sq.at(b.row, b.col));
    CHECK(sq.at(a.col, a.row) == sq.at(b.col, b.row));
}

}  // namespace

TEST_CASE("method names round trip") {
    for (Method m : {Method::Bruteforce, Method::StackedMatrix, Method::GcdGeneral, Method::GcdBinary, Method::Parity,
                     Method::IrreducibleSufficient})
        CHECK(parse_method(method_name(m)) == m);
    CHECK_FALSE(parse_method("fast"));
}

TEST_CASE("rules 150 and 90") {
    const Field f2;
    const LinearRule r150(f2, {1, 1, 1});
    const LinearRule r90(f2, {1, 0, 1});
    CHECK(soca_bruteforce(rule_from_wolfram(150, 3)).verdict);
    const SocaVerdict b90 = soca_bruteforce(rule_from_wolfram(90, 3));
    CHECK_FALSE(b90.verdict);
    check_cells_certificate(rule_from_wolfram(90, 3), b90);

    CHECK(soca_binary_fast(r150).verdict);
    CHECK(soca_linear_fast(r150).verdict);
    CHECK(soca_stacked_matrix(r150).verdict);
    CHECK(soca_parity(r150).verdict);
    CHECK(irreducible_implies_soca(r150)->verdict);

    const SocaVerdict g90 = soca_binary_fast(r90);
    CHECK_FALSE(g90.verdict);
    CHECK(g90.gcd->to_string() == "1+X^2");
    CHECK(soca_linear_fast(r90).gcd->to_string() == "1+X^2");
    CHECK(soca_parity(r90).gcd->to_string() == "1+X");
    CHECK_FALSE(irreducible_implies_soca(r90));
    check_cells_certificate(rule_from_wolfram(90, 3), soca_stacked_matrix(r90));
}

TEST_CASE("preconditions") {
    const Field f2;
    const Field f3 = Field::make(3);
    CHECK_THROWS_AS(soca_bruteforce(rule_from_wolfram(30, 3)), PreconditionError);
    CHECK_THROWS_AS(soca_linear_fast(LinearRule(f2, {0, 1, 1})), PreconditionError);
    CHECK_THROWS_AS(soca_binary_fast(LinearRule(f3, {1, 1, 1})), PreconditionError);
    CHECK_THROWS_AS(soca_parity(LinearRule(f2, {1, 1, 1, 1})), PreconditionError);
    CHECK_THROWS_AS(irreducible_implies_soca(LinearRule(f2, {1, 1})), PreconditionError);
    CHECK_THROWS_AS(soca_check(bipermutive_rule(f2, 4, 1), Method::GcdBinary), PreconditionError);  // nonlinear
    CHECK_THROWS_AS(oca_pair_check(LinearRule(f2, {1, 1, 1}), LinearRule(f2, {1, 1}), PairMode::Fast), PreconditionError);
}

TEST_CASE("all methods agree on linear rules") {
    for (const Field& f : {Field(), Field::make(3), Field::parse("GF(4)"), Field::make(5)}) {
        const int max_d = f.order() == 2 ? 7 : (f.order() <= 4 ? 4 : 3);
        for (int d = 2; d <= max_d; ++d)
            for (const LinearRule& lr : linear_bipermutive(f, d)) {
                const LocalRule table = rule_from_linear(lr);
                const SocaVerdict brute = soca_bruteforce(table);
                const SocaVerdict stacked = soca_stacked_matrix(lr);
                const SocaVerdict general = soca_linear_fast(lr);
                CHECK(stacked.verdict == brute.verdict);
                CHECK(general.verdict == brute.verdict);
                CHECK(pbca_invertible(lr, static_cast<std::size_t>(2 * (d - 1))) == brute.verdict);
                if (!brute.verdict) {
                    check_cells_certificate(table, brute);
                    check_cells_certificate(table, stacked);
                    CHECK((associated_polynomial(lr) % *general.gcd).is_zero());
                }
                if (f.characteristic() == 2) {
                    CHECK(soca_binary_fast(lr).verdict == brute.verdict);
                    if (std::has_single_bit(static_cast<unsigned>(d - 1))) CHECK(soca_parity(lr).verdict == brute.verdict);
                    if (d > 2)
                        if (auto v = irreducible_implies_soca(lr)) CHECK(brute.verdict);
                }
                const AuditReport report = audit(table);
                CHECK(report.verdict == brute.verdict);
            }
    }
}

TEST_CASE("binary brute force agrees with the oracle construction") {
    for (int d = 3; d <= 6; ++d)
        for (std::uint64_t mid = 0; mid < (std::uint64_t{1} << (d - 2)); ++mid) {
            std::vector<int> a(static_cast<std::size_t>(d), 0);
            a.front() = a.back() = 1;
            for (int i = 1; i + 1 < d; ++i) a[static_cast<std::size_t>(i)] = static_cast<int>((mid >> (i - 1)) & 1);
            const auto grid = oracle::binary_cayley(oracle::linear_table(a), d);
            const bool expected = oracle::orthogonal(grid, oracle::transposed(grid));
            std::vector<Element> coeffs(a.begin(), a.end());
            CHECK(soca_bruteforce(rule_from_linear(LinearRule(Field(), coeffs))).verdict == expected);
            std::uint64_t p = 0;
            for (int i = 0; i < d; ++i) p |= static_cast<std::uint64_t>(a[static_cast<std::size_t>(i)]) << i;
            CHECK((oracle::gcd(p, (std::uint64_t{1} << (d - 1)) | 1) == 1) == expected);
        }
}

TEST_CASE("affine rules are handled through their linear part") {
    const LocalRule r105 = rule_from_wolfram(105, 3);
    const SocaVerdict v = soca_check(r105, Method::GcdBinary);
    CHECK(v.verdict);
    CHECK_FALSE(v.note.empty());
    CHECK(soca_bruteforce(r105).verdict);
    CHECK_FALSE(soca_check(rule_from_wolfram(165, 3), Method::StackedMatrix).verdict);
    const AuditReport report = audit(r105);
    CHECK(report.verdict);
    CHECK(report.log.front().method == Method::Bruteforce);
    CHECK(report.log.front().note.empty());
    for (std::size_t i = 1; i < report.log.size(); ++i) CHECK_FALSE(report.log[i].note.empty());
}

TEST_CASE("audit of nonlinear and large rules") {
    const AuditReport nl = audit(bipermutive_rule(Field(), 4, 1));
    CHECK(nl.log.size() == 1);
    CHECK_FALSE(nl.skipped.empty());
    // d = 16 linear: the Cayley table is too large, the algebraic methods still run.
    std::vector<Element> a(16, 0);
    a.front() = a.back() = 1;
    a[3] = 1;
    const AuditReport big = audit(rule_from_linear(LinearRule(Field(), a)));
    CHECK(big.log.front().method == Method::StackedMatrix);
    CHECK(big.verdict == soca_binary_fast(LinearRule(Field(), a)).verdict);
}

TEST_CASE("parity equals gcd when d - 1 is a power of two") {
    for (int d : {2, 3, 5, 9, 17})
        for (std::uint64_t mid = 0; mid < (std::uint64_t{1} << (d - 2)); ++mid) {
            std::vector<Element> a(static_cast<std::size_t>(d), 0);
            a.front() = a.back() = 1;
            for (int i = 1; i + 1 < d; ++i) a[static_cast<std::size_t>(i)] = static_cast<Element>((mid >> (i - 1)) & 1);
            const LinearRule lr(Field(), a);
            CHECK(soca_parity(lr).verdict == soca_binary_fast(lr).verdict);
        }
}

TEST_CASE("irreducible polynomials give self-orthogonal rules") {
    for (int d = 3; d <= 10; ++d)
        for (const Polynomial& p : irreducibles_of_degree(Field(), d - 1)) {
            if (p.coeff(0) == 0) continue;  // X itself at d = 2 only
            const LinearRule lr(Field(), std::vector<Element>(p.coeffs().begin(), p.coeffs().end()));
            CHECK(soca_binary_fast(lr).verdict);
            CHECK(irreducible_implies_soca(lr).has_value());
        }
    const LinearRule witness = LinearRule::parse(Field(), "1,1,0,0,0,1");
    CHECK(soca_binary_fast(witness).verdict);
    CHECK_FALSE(irreducible_implies_soca(witness));
}

TEST_CASE("pairwise orthogonality") {
    const auto rules = linear_bipermutive(Field(), 4);
    for (const LinearRule& a : rules)
        for (const LinearRule& b : rules) {
            const bool fast = oca_pair_check(a, b, PairMode::Fast);
            CHECK(fast == oca_pair_check(a, b, PairMode::Bruteforce));
            const auto grid_a = oracle::binary_cayley(oracle::wolfram_bits(std::stoull(rule_from_linear(a).wolfram_code()), 4), 4);
            const auto grid_b = oracle::binary_cayley(oracle::wolfram_bits(std::stoull(rule_from_linear(b).wolfram_code()), 4), 4);
            CHECK(fast == oracle::orthogonal(grid_a, grid_b));
        }
    const Field f3 = Field::make(3);
    const auto r3 = linear_bipermutive(f3, 3);
    for (const LinearRule& a : r3)
        for (const LinearRule& b : r3) CHECK(oca_pair_check(a, b, PairMode::Fast) == oca_pair_check(a, b, PairMode::Bruteforce));
    CHECK(oca_pair_check(LinearRule(Field(), {1, 0, 1}), LinearRule(Field(), {1, 1, 1}), PairMode::Bruteforce));
}

TEST_CASE("PBCA invertibility") {
    const LinearRule r150(Field(), {1, 1, 1});
    CHECK(pbca_invertible(r150, 4));
    CHECK_FALSE(pbca_invertible(r150, 3));  // 1+X+X^2 divides X^3+1
    CHECK_THROWS_AS(pbca_invertible(r150, 2), PreconditionError);
}
