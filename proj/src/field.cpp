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

#include "soca/field.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <charconv>

#include "soca/errors.hpp"

namespace soca {

namespace {

constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0x0,    0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,    0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
};

int bit_degree(std::uint64_t a) noexcept { return static_cast<int>(std::bit_width(a)) - 1; }

std::uint64_t packed_mod(std::uint64_t a, std::uint64_t m) noexcept {
    const int dm = bit_degree(m);
    for (int da = bit_degree(a); da >= dm; da = bit_degree(a)) a ^= m << (da - dm);
    return a;
}

bool packed_irreducible(std::uint32_t m) noexcept {
    const int k = bit_degree(m);
    if (k < 1) return false;
    for (std::uint32_t d = 2; bit_degree(d) <= k / 2; ++d)
        if (packed_mod(m, d) == 0) return false;
    return true;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ParseError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
    return v;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint32_t default_binary_modulus(std::uint32_t k) {
    if (k < 1 || k >= kDefaultModuli.size())
        throw PreconditionError("no built-in modulus for GF(2^" + std::to_string(k) + ")");
    return kDefaultModuli[k];
}

Field Field::make(std::uint32_t p, std::uint32_t k, std::optional<std::vector<Element>> modulus) {
    if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw PreconditionError("extension degree must be at least 1");
    if (k == 1) {
        if (p > kMaxFieldOrder) throw ScaleGuardError("field order exceeds 2^16");
        return Field(p, 1, 0);
    }
    if (p != 2) throw PreconditionError("only binary extension fields GF(2^k) are supported");
    if (k > 16) throw ScaleGuardError("field order exceeds 2^16");

    std::uint32_t bits = 0;
    if (modulus) {
        if (modulus->size() != k + 1 || modulus->back() != 1)
            throw PreconditionError("modulus must be a monic polynomial of degree " + std::to_string(k));
        for (std::size_t i = 0; i < modulus->size(); ++i) {
            if ((*modulus)[i] > 1) throw PreconditionError("modulus coefficients must lie in GF(2)");
            if ((*modulus)[i]) bits |= 1u << i;
        }
        if (!(bits & 1)) throw PreconditionError("modulus must have a nonzero constant term");
        if (!packed_irreducible(bits)) throw PreconditionError("modulus is reducible over GF(2)");
    } else {
        bits = default_binary_modulus(k);
    }
    return Field(2, k, bits);
}

Field Field::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 5 || std::toupper(static_cast<unsigned char>(s[0])) != 'G' ||
        std::toupper(static_cast<unsigned char>(s[1])) != 'F' || s[2] != '(')
        throw ParseError("field descriptor must look like GF(q): '" + std::string(text) + "'");
    const auto close = s.find(')');
    if (close == std::string::npos) throw ParseError("unterminated field descriptor");
    const std::string_view inner = std::string_view(s).substr(3, close - 3);
    const std::string_view tail = std::string_view(s).substr(close + 1);

    std::optional<std::vector<Element>> modulus;
    if (!tail.empty()) {
        if (tail.front() != '/' || tail.size() < 2) throw ParseError("expected '/modulus' after GF(...)");
        modulus.emplace();
        for (char c : tail.substr(1)) {
            if (c != '0' && c != '1') throw ParseError("modulus must be a 0/1 coefficient string");
            modulus->push_back(static_cast<Element>(c - '0'));
        }
        while (!modulus->empty() && modulus->back() == 0) modulus->pop_back();
    }

    std::uint32_t p = 0;
    std::uint32_t k = 1;
    if (const auto caret = inner.find('^'); caret != std::string_view::npos) {
        p = parse_uint(inner.substr(0, caret), "characteristic");
        k = parse_uint(inner.substr(caret + 1), "extension degree");
    } else {
        const std::uint32_t q = parse_uint(inner, "field order");
        if (is_prime(q)) {
            p = q;
        } else if (q > 2 && std::has_single_bit(q)) {
            p = 2;
            k = static_cast<std::uint32_t>(std::countr_zero(q));
        } else {
            throw PreconditionError("unsupported field order " + std::to_string(q));
        }
    }
    if (modulus && k == 1) throw ParseError("a modulus is only meaningful for extension fields");
    return make(p, k, std::move(modulus));
}

std::vector<Element> Field::modulus() const {
    std::vector<Element> out;
    if (k_ == 1) return out;
    for (std::uint32_t i = 0; i <= k_; ++i) out.push_back((modulus_ >> i) & 1u);
    return out;
}

std::string Field::descriptor() const {
    if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
    std::string out = "GF(2^" + std::to_string(k_) + ")/";
    for (Element c : modulus()) out.push_back(static_cast<char>('0' + c));
    return out;
}

void Field::check(Element a) const {
    if (a >= q_)
        throw PreconditionError("element " + std::to_string(a) + " is not in " + descriptor());
}

Element Field::add(Element a, Element b) const {
    check(a);
    check(b);
    if (p_ == 2) return a ^ b;
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
}

Element Field::neg(Element a) const {
    check(a);
    if (p_ == 2 || a == 0) return a;
    return p_ - a;
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
    check(a);
    check(b);
    if (k_ == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
    return static_cast<Element>(packed_mod(clmul(a, b), modulus_));
}

Element Field::pow(Element a, std::uint64_t e) const {
    Element result = 1;
    Element base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Element Field::inv(Element a) const {
    check(a);
    if (a == 0) throw DomainError("zero has no multiplicative inverse");
    return pow(a, q_ - 2);
}

}  // namespace soca
