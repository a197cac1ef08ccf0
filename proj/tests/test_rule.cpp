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

#include <set>

#include "oracles.hpp"
#include "soca/errors.hpp"
#include "soca/rule.hpp"

using namespace soca;

namespace {

Configuration cfg(std::initializer_list<Element> v) { return Configuration(v); }

}  // namespace

TEST_CASE("Wolfram codes") {
    const LocalRule r150 = rule_from_wolfram(150, 3);
    CHECK(r150.wolfram_code() == "150");
    for (std::uint32_t v = 0; v < 8; ++v) {
        const Element x1 = (v >> 2) & 1, x2 = (v >> 1) & 1, x3 = v & 1;
        CHECK(r150(cfg({x1, x2, x3})) == (x1 ^ x2 ^ x3));
        CHECK(rule_from_wolfram(90, 3)(cfg({x1, x2, x3})) == (x1 ^ x3));
        CHECK(rule_from_wolfram(0, 3)(cfg({x1, x2, x3})) == 0);
    }
    CHECK(rule_from_wolfram("150", 3) == r150);
    CHECK(rule_from_wolfram("0x96", 3) == r150);
    CHECK(r150.wolfram_hex() == "96");
    CHECK_THROWS_AS(rule_from_wolfram(256, 3), PreconditionError);
    CHECK_THROWS_AS(rule_from_wolfram("12a", 3), ParseError);

    // 2^64 - 1 + 1 at d = 7 needs the string path.
    const LocalRule big = rule_from_wolfram("18446744073709551616", 7);
    CHECK(big.at(64) == 1);
    CHECK(big.wolfram_code() == "18446744073709551616");
    CHECK(rule_from_wolfram("0x" + big.wolfram_hex(), 7) == big);
}

TEST_CASE("linear rules to tables") {
    const Field f2;
    CHECK(rule_from_linear(LinearRule(f2, {1, 1, 1})).wolfram_code() == "150");
    CHECK(rule_from_linear(LinearRule(f2, {1, 0, 1})).wolfram_code() == "90");
    const Field f3 = Field::make(3);
    const LocalRule r = rule_from_linear(LinearRule(f3, {1, 2}));
    for (Element a = 0; a < 3; ++a)
        for (Element b = 0; b < 3; ++b) CHECK(r.at(a * 3 + b) == (a + 2 * b) % 3);
    CHECK(LinearRule::parse(f3, "linear:1, 2,0").to_string() == "linear:1,2,0");
    CHECK_THROWS_AS(LinearRule::parse(f3, "1,3"), ParseError);
    CHECK_THROWS_AS(LinearRule::parse(f3, "1,,2"), ParseError);
}

TEST_CASE("bipermutive elementary rules") {
    std::set<int> found;
    for (int code = 0; code < 256; ++code)
        if (is_bipermutive(rule_from_wolfram(static_cast<std::uint64_t>(code), 3))) found.insert(code);
    CHECK(found == std::set<int>{90, 105, 150, 165});

    // Oracle: a binary rule is permutive in x_1 iff flipping x_1 always flips the output.
    for (int code = 0; code < 256; ++code) {
        const auto t = oracle::wolfram_bits(static_cast<std::uint64_t>(code), 3);
        bool first = true, last = true;
        for (int v = 0; v < 8; ++v) {
            first = first && t[static_cast<std::size_t>(v)] != t[static_cast<std::size_t>(v ^ 4)];
            last = last && t[static_cast<std::size_t>(v)] != t[static_cast<std::size_t>(v ^ 1)];
        }
        const LocalRule r = rule_from_wolfram(static_cast<std::uint64_t>(code), 3);
        CHECK(is_permutive(r, 1) == first);
        CHECK(is_permutive(r, 3) == last);
    }
    CHECK_FALSE(is_bipermutive(rule_from_wolfram(0, 3)));
}

TEST_CASE("bipermutive binary rules counted by brute force") {
    for (int d = 2; d <= 4; ++d) {
        const std::uint64_t total = std::uint64_t{1} << (1u << d);
        std::uint64_t count = 0;
        for (std::uint64_t code = 0; code < total; ++code) count += is_bipermutive(rule_from_wolfram(code, d));
        CHECK(count == (std::uint64_t{1} << (1u << (d - 2))));
    }
}

TEST_CASE("ANF") {
    const AnfForm a150 = anf(rule_from_wolfram(150, 3));
    CHECK(a150.degree() == 1);
    CHECK(a150.constant() == 0);
    CHECK(a150.to_string() == "x1+x2+x3");
    const AnfForm a105 = anf(rule_from_wolfram(105, 3));
    CHECK(a105.constant() == 1);
    CHECK(a105.to_string() == "1+x1+x2+x3");
    CHECK(anf(rule_from_wolfram(0, 3)).degree() == -1);
    for (std::uint64_t code = 0; code < 65536; ++code) {
        const LocalRule r = rule_from_wolfram(code, 4);
        CHECK(rule_from_anf(anf(r)) == r);
    }
    CHECK_THROWS_AS(anf(rule_from_linear(LinearRule(Field::make(3), {1, 1}))), PreconditionError);
}

TEST_CASE("bipermutive binary rules have the x1 + g + xd shape") {
    for (std::uint64_t code = 0; code < 65536; ++code) {
        const LocalRule r = rule_from_wolfram(code, 4);
        const AnfForm a = anf(r);
        // Monomials are indexed by u with bit (d - i) selecting x_i.
        bool shape = a.coeffs[0b1000] && a.coeffs[0b0001];
        for (std::size_t u = 0; u < a.coeffs.size(); ++u)
            if (u != 0b1000 && u != 0b0001 && (u & 0b1001) && a.coeffs[u]) shape = false;
        CHECK(is_bipermutive(r) == shape);
    }
}

TEST_CASE("linearity detection") {
    const auto l150 = as_linear(rule_from_wolfram(150, 3));
    REQUIRE(l150);
    CHECK(l150->to_string() == "linear:1,1,1");
    CHECK_FALSE(as_linear(rule_from_wolfram(105, 3)));
    const auto aff = as_affine(rule_from_wolfram(105, 3));
    REQUIRE(aff);
    CHECK(aff->constant == 1);
    CHECK(aff->linear.to_string() == "linear:1,1,1");
    // x1 + x2 x3 + x4
    const LocalRule nl = rule_from_anf(AnfForm{4, {0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0}});
    CHECK(is_bipermutive(nl));
    CHECK_FALSE(as_linear(nl));
    CHECK_FALSE(as_affine(nl));

    const Field f3 = Field::make(3);
    const Field f4 = Field::parse("GF(4)");
    for (const Field& f : {f3, f4}) {
        const LinearRule lr(f, {1, 2, 1});
        CHECK(as_linear(rule_from_linear(lr)) == lr);
        const LocalRule base = rule_from_linear(lr);
        std::vector<Element> table(base.table().begin(), base.table().end());
        for (auto& e : table) e = f.add(e, 1);
        const auto shifted = as_affine(LocalRule(f, 3, table));
        REQUIRE(shifted);
        CHECK(shifted->linear == lr);
        CHECK(shifted->constant == 1);
        CHECK_FALSE(as_linear(LocalRule(f, 3, table)));
        table[5] = f.add(table[5], 1);
        CHECK_FALSE(as_affine(LocalRule(f, 3, table)));
    }
}

TEST_CASE("complement") {
    CHECK(complement(rule_from_wolfram(150, 3)).wolfram_code() == "105");
    CHECK(complement(rule_from_wolfram(90, 3)).wolfram_code() == "165");
    const LocalRule r = rule_from_wolfram(30, 3);
    CHECK(complement(complement(r)) == r);
}

TEST_CASE("NBCA and PBCA evaluation") {
    const LocalRule r150 = rule_from_wolfram(150, 3);
    const LocalRule r90 = rule_from_wolfram(90, 3);
    CHECK(nbca_eval(r150, cfg({1, 0, 0, 0, 0, 1})) == cfg({1, 0, 0, 1}));
    CHECK(nbca_eval(r150, cfg({0, 0, 0, 0})) == cfg({0, 0}));
    CHECK(nbca_eval(r90, cfg({1, 0, 0, 1})) == cfg({1, 1}));
    CHECK(pbca_eval(r150, cfg({1, 0, 0, 0, 0, 1})) == cfg({1, 0, 0, 1, 0, 0}));
    CHECK(pbca_eval(r150, cfg({0, 0, 0, 0, 0})) == cfg({0, 0, 0, 0, 0}));
    CHECK(pbca_eval(r90, cfg({1, 0, 0, 0})) == cfg({1, 0, 1, 0}));
    CHECK_THROWS_AS(nbca_eval(r150, cfg({1, 0})), PreconditionError);
}

TEST_CASE("associated polynomial and transition matrix") {
    const Field f2;
    CHECK(associated_polynomial(LinearRule(f2, {1, 1, 1})).to_string() == "1+X+X^2");
    CHECK(associated_polynomial(LinearRule(f2, {1, 0, 1})).to_string() == "1+X^2");
    CHECK(associated_polynomial(LinearRule(f2, {1, 0, 0, 1})).to_string() == "1+X^3");
    CHECK(transition_matrix(LinearRule(f2, {1, 1, 1}), 4) == Matrix(f2, {{1, 1, 1, 0}, {0, 1, 1, 1}}));
    CHECK(transition_matrix(LinearRule(f2, {1, 0, 1}), 4) == Matrix(f2, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
    CHECK(transition_matrix(LinearRule(f2, {1, 1}), 2) == Matrix(f2, {{1, 1}}));
    CHECK_THROWS_AS(transition_matrix(LinearRule(f2, {1, 1, 1}), 2), PreconditionError);
}

TEST_CASE("NBCA equals the transition matrix product") {
    const Field f3 = Field::make(3);
    const Field f4 = Field::parse("GF(4)");
    const std::vector<LinearRule> rules{LinearRule(Field(), {1, 0, 1, 1}), LinearRule(f3, {2, 1, 1}),
                                        LinearRule(f4, {3, 0, 2})};
    for (const LinearRule& lr : rules) {
        const LocalRule table = rule_from_linear(lr);
        const std::size_t q = lr.field().order();
        const std::size_t n = q == 2 ? 12 : (q == 3 ? 8 : 7);
        const Matrix m = transition_matrix(lr, n);
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= q;
        Configuration x(n, 0);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t k = idx;
            for (auto& e : x) {
                e = static_cast<Element>(k % q);
                k /= q;
            }
            CHECK(nbca_eval(table, x) == apply(m, x));
        }
    }
}
