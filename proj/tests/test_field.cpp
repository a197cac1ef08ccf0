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

#include <random>

#include "oracles.hpp"
#include "soca/errors.hpp"
#include "soca/field.hpp"

using namespace soca;

TEST_CASE("small field arithmetic") {
    const Field f2;
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.mul(1, 1) == 1);
    const Field f3 = Field::make(3);
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.neg(1) == 2);
    CHECK(f3.sub(0, 2) == 1);
    CHECK(f3.inv(2) == 2);
}

TEST_CASE("GF(4) matches a multiplication table built from the modulus") {
    const Field f4 = Field::make(2, 2, std::vector<Element>{1, 1, 1});
    CHECK(f4.order() == 4);
    CHECK(f4.mul(2, 2) == 3);  // X * X = X + 1
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b) {
            CHECK(f4.mul(a, b) == oracle::gf4_mul(a, b));
            CHECK(f4.add(a, b) == (a ^ b));
        }
    CHECK(Field::parse("GF(4)") == f4);
    CHECK(Field::parse("GF(2^2)/111") == f4);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (const char* desc : {"GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(11)", "GF(13)", "GF(16)"}) {
        const Field f = Field::parse(desc);
        const Element q = f.order();
        for (Element a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (Element b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                if (f.characteristic() == 2) CHECK(f.mul(f.add(a, b), f.add(a, b)) == f.add(f.mul(a, a), f.mul(b, b)));
                for (Element c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("large binary extension fields have working inverses") {
    std::mt19937 rng(7);
    for (std::uint32_t k = 1; k <= 16; ++k) {
        const Field f = Field::make(2, k);
        std::uniform_int_distribution<Element> dist(1, f.order() - 1);
        for (int i = 0; i < 50; ++i) {
            const Element a = dist(rng);
            CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("default binary moduli are irreducible") {
    for (std::uint32_t k = 1; k <= 16; ++k) {
        const std::uint32_t m = default_binary_modulus(k);
        CHECK(oracle::deg(m) == static_cast<int>(k));
        CHECK(oracle::irreducible(m));
    }
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(Field::make(4), PreconditionError);
    CHECK_THROWS_AS(Field::make(3, 2), PreconditionError);
    CHECK_THROWS_AS(Field::make(2, 17), PreconditionError);
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<Element>{1, 0, 1}), PreconditionError);  // (1+X)^2
    CHECK_THROWS_AS(Field::make(2, 3, std::vector<Element>{1, 1, 1}), PreconditionError);  // wrong degree
    CHECK_THROWS_AS(Field::parse("GF(6)"), PreconditionError);
    CHECK_THROWS_AS(Field::parse("F(2)"), ParseError);
    CHECK_THROWS_AS(Field::parse("GF(2^3)/1201"), ParseError);
    CHECK_THROWS_AS(Field().inv(0), DomainError);
}

TEST_CASE("descriptor round trip") {
    for (const char* desc : {"GF(2)", "GF(3)", "GF(4)", "GF(2^5)", "GF(2^3)/1101", "GF(65536)"}) {
        const Field f = Field::parse(desc);
        CHECK(Field::parse(f.descriptor()) == f);
    }
    CHECK(Field::parse("GF(2^3)/1101").modulus() == std::vector<Element>{1, 1, 0, 1});
}
