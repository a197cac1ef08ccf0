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
#include <set>

#include "oracles.hpp"
#include "soca/errors.hpp"
#include "soca/gf2.hpp"
#include "soca/polynomial.hpp"

using namespace soca;

namespace {

Polynomial bits(std::uint64_t mask) { return gf2::unpack(mask); }

Polynomial random_poly(const Field& f, std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::uniform_int_distribution<Element> coef(0, f.order() - 1);
    std::vector<Element> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& e : c) e = coef(rng);
    return Polynomial(f, c);
}

}  // namespace

TEST_CASE("parse and print") {
    const Field f2;
    CHECK(Polynomial::parse(f2, "1+x^2+x^3").coeffs().size() == 4);
    CHECK(Polynomial::parse(f2, "X^3 + 1 + x^2") == Polynomial::parse(f2, "1+x^2+x^3"));
    CHECK(Polynomial::parse(f2, "1011") == Polynomial::parse(f2, "1+x^2+x^3"));
    CHECK(Polynomial::parse(f2, "1+x+x^5").to_string() == "1+X+X^5");
    CHECK(Polynomial::parse(f2, "1+x^2+x^3").to_coefficient_string() == "1011");
    CHECK(Polynomial(f2).to_string() == "0");
    const Field f3 = Field::make(3);
    const Polynomial p = Polynomial::parse(f3, "2*x^3 + x - 1");
    CHECK(p.coeffs()[0] == 2);
    CHECK(p.coeffs()[1] == 1);
    CHECK(p.coeffs()[3] == 2);
    CHECK(Polynomial::parse(f3, p.to_string()) == p);
    CHECK_THROWS_AS(Polynomial::parse(f2, "1+y"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse(f2, "3*x"), ParseError);
}

TEST_CASE("division examples") {
    const Field f2;
    auto [q, r] = divmod(bits(0b10001), bits(0b11));
    CHECK(q == bits(0b1111));
    CHECK(r.is_zero());
    auto [q2, r2] = divmod(bits(0b111), bits(0b11));
    CHECK(q2 == bits(0b10));
    CHECK(r2.is_one());
    const Polynomial a = bits(0b1011);
    auto [q3, r3] = divmod(a, a);
    CHECK(q3.is_one());
    CHECK(r3.is_zero());
    CHECK_THROWS_AS(divmod(a, Polynomial(f2)), DomainError);
}

TEST_CASE("gcd examples") {
    const Field f2;
    const Polynomial x4p1 = Polynomial::x_pow_minus_one(f2, 4);
    CHECK(gcd(bits(0b111), x4p1).is_one());
    CHECK(gcd(bits(0b101), x4p1) == bits(0b101));
    CHECK(gcd(bits(0b101), bits(0b111)).is_one());
    CHECK_THROWS_AS(gcd(Polynomial(f2), Polynomial(f2)), DomainError);
}

TEST_CASE("evaluation") {
    const Field f2;
    CHECK(eval(bits(0b111), 1) == 1);
    CHECK(eval(bits(0b101), 1) == 0);
    CHECK(eval(Polynomial(f2), 1) == 0);
    const Field f3 = Field::make(3);
    CHECK(eval(Polynomial(f3, {1, 1, 1}), 1) == 0);
    CHECK(eval(Polynomial(f3, {1, 0, 2}), 2) == 0);  // 1 + 2*4 = 9
}

TEST_CASE("GF(2) arithmetic agrees with the bitmask oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t a = rng() & 0xffffff;
        const std::uint64_t b = (rng() & 0xffff) | 1;
        CHECK(gf2::pack(bits(a) * bits(b)) == oracle::mul(a, b));
        CHECK(gf2::pack(bits(a) + bits(b)) == (a ^ b));
        const DivMod qr = divmod(bits(a), bits(b));
        CHECK(gf2::pack(qr.quotient) == oracle::div(a, b));
        CHECK(gf2::pack(qr.remainder) == oracle::mod(a, b));
        CHECK(gf2::pack(gcd(bits(a), bits(b))) == oracle::gcd(a, b));
        CHECK(gf2::gcd(a, b) == oracle::gcd(a, b));
        CHECK(gf2::mod(a, b) == oracle::mod(a, b));
    }
}

TEST_CASE("gcd divides both arguments and is symmetric and monic") {
    std::mt19937 rng(3);
    for (const char* desc : {"GF(2)", "GF(3)", "GF(4)"}) {
        const Field f = Field::parse(desc);
        for (int i = 0; i < 300; ++i) {
            const Polynomial a = random_poly(f, rng, 9);
            const Polynomial b = random_poly(f, rng, 7);
            if (a.is_zero() && b.is_zero()) continue;
            const Polynomial g = gcd(a, b);
            CHECK(g.leading() == 1);
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
            CHECK(gcd(b, a) == g);
            if (!a.is_zero()) CHECK(gcd(a, Polynomial(f)) == monic(a));
            if (!b.is_zero()) {
                const DivMod qr = divmod(a, b);
                CHECK(qr.quotient * b + qr.remainder == a);
                CHECK(qr.remainder.degree() < b.degree());
            }
        }
    }
}

TEST_CASE("Rabin test agrees with trial division") {
    const Field f2;
    for (std::uint64_t p = 2; p < (1u << 9); ++p) CHECK(is_irreducible(bits(p)) == oracle::irreducible(p));
    for (int m = 1; m <= 8; ++m) {
        std::set<std::uint64_t> listed;
        for (const Polynomial& p : irreducibles_of_degree(f2, m)) listed.insert(gf2::pack(p));
        for (std::uint64_t p = std::uint64_t{1} << m; p < (std::uint64_t{2} << m); ++p)
            CHECK((listed.count(p) == 1) == is_irreducible(bits(p)));
    }
    const Field f3 = Field::make(3);
    for (int m = 1; m <= 4; ++m) {
        const auto list = irreducibles_of_degree(f3, m);
        const std::set<std::vector<Element>> listed = [&] {
            std::set<std::vector<Element>> s;
            for (const Polynomial& p : list) s.insert(std::vector<Element>(p.coeffs().begin(), p.coeffs().end()));
            return s;
        }();
        std::uint64_t count = 1;
        for (int i = 0; i < m; ++i) count *= 3;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<Element> c(static_cast<std::size_t>(m) + 1, 1);
            std::uint64_t k = idx;
            for (int i = 0; i < m; ++i, k /= 3) c[static_cast<std::size_t>(i)] = static_cast<Element>(k % 3);
            CHECK((listed.count(c) == 1) == is_irreducible(Polynomial(f3, c)));
        }
    }
}

TEST_CASE("irreducible listings") {
    const Field f2;
    const auto m1 = irreducibles_of_degree(f2, 1);
    REQUIRE(m1.size() == 2);
    CHECK(m1[0].to_string() == "X");
    CHECK(m1[1].to_string() == "1+X");
    const auto m2 = irreducibles_of_degree(f2, 2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0].to_string() == "1+X+X^2");
    std::set<std::string> m4;
    for (const Polynomial& p : irreducibles_of_degree(f2, 4)) m4.insert(p.to_string());
    CHECK(m4 == std::set<std::string>{"1+X+X^4", "1+X^3+X^4", "1+X+X^2+X^3+X^4"});
    // Necklace counts: 2, 1, 2, 3, 6, 9, 18, 30, 56, 99.
    const std::vector<std::size_t> expected{2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
    for (int m = 1; m <= 10; ++m) CHECK(irreducibles_of_degree(f2, m).size() == expected[static_cast<std::size_t>(m - 1)]);
    CHECK(irreducibles_of_degree(Field::make(3), 2).size() == 3);
    CHECK(irreducibles_of_degree(Field::parse("GF(4)"), 2).size() == 6);
    CHECK_THROWS_AS(irreducibles_of_degree(f2, 0), PreconditionError);
    CHECK_THROWS_AS(irreducibles_of_degree(f2, 11), PreconditionError);
}

TEST_CASE("irreducibility examples") {
    const Field f2;
    CHECK(is_irreducible(Polynomial::parse(f2, "1+x+x^3")));
    CHECK_FALSE(is_irreducible(Polynomial::parse(f2, "1+x+x^5")));
    CHECK(is_irreducible(Polynomial::parse(f2, "x+1")));
    CHECK_THROWS_AS(is_irreducible(Polynomial::constant(f2, 1)), PreconditionError);
}

TEST_CASE("characteristic 2 squares X^m + 1") {
    const Field f2;
    const Field f4 = Field::parse("GF(4)");
    for (std::size_t m = 1; m <= 16; ++m) {
        const Polynomial a = Polynomial::x_pow_minus_one(f2, m);
        CHECK(a * a == Polynomial::x_pow_minus_one(f2, 2 * m));
        const Polynomial b = Polynomial::x_pow_minus_one(f4, m);
        CHECK(b * b == Polynomial::x_pow_minus_one(f4, 2 * m));
    }
}

TEST_CASE("trial-division factorization") {
    const Field f2;
    const auto f = factor(Polynomial::parse(f2, "1+x+x^5"));
    REQUIRE(f.size() == 2);
    CHECK(f[0].to_string() == "1+X+X^2");
    CHECK(f[1].to_string() == "1+X^2+X^3");
    std::mt19937 rng(5);
    for (const char* desc : {"GF(2)", "GF(3)", "GF(4)"}) {
        const Field fld = Field::parse(desc);
        for (int i = 0; i < 100; ++i) {
            const Polynomial a = random_poly(fld, rng, 10);
            if (a.degree() < 1) continue;
            Polynomial prod = Polynomial::constant(fld, 1);
            for (const Polynomial& p : factor(a)) {
                CHECK(is_irreducible(p));
                prod = prod * p;
            }
            CHECK(prod == monic(a));
        }
    }
}
