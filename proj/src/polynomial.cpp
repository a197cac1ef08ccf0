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

#include "soca/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "soca/errors.hpp"

namespace soca {

namespace {

constexpr std::size_t kMaxParsedExponent = 1u << 20;

void require_same_field(const Polynomial& a, const Polynomial& b) {
    if (!(a.field() == b.field()))
        throw PreconditionError("polynomials over different fields: " + a.field().descriptor() + " vs " +
                                b.field().descriptor());
}

std::size_t parse_number(std::string_view s, std::string_view text) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("malformed polynomial term '" + std::string(s) + "' in '" + std::string(text) + "'");
    return v;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t r = 2; r * r <= n; ++r) {
        if (n % r) continue;
        out.push_back(r);
        while (n % r == 0) n /= r;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Polynomial::Polynomial(const Field& field, std::vector<Element> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (Element c : coeffs_)
        if (!field_.contains(c))
            throw PreconditionError("coefficient " + std::to_string(c) + " is not in " + field_.descriptor());
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Field& field, Element c) { return Polynomial(field, {c}); }

Polynomial Polynomial::monomial(const Field& field, Element c, std::size_t degree) {
    std::vector<Element> v(degree + 1, 0);
    v[degree] = c;
    return Polynomial(field, std::move(v));
}

Polynomial Polynomial::x_pow_minus_one(const Field& field, std::size_t n) {
    std::vector<Element> v(n + 1, 0);
    v[0] = field.neg(1);
    v[n] = field.add(v[n], 1);
    return Polynomial(field, std::move(v));
}

std::size_t Polynomial::weight() const noexcept {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Element c) { return c != 0; }));
}

Polynomial Polynomial::parse(const Field& field, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
    if (s.empty()) throw ParseError("empty polynomial");

    if (field.is_binary() && s.size() >= 2 && s.find_first_not_of("01") == std::string::npos) {
        std::vector<Element> v;
        for (char c : s) v.push_back(static_cast<Element>(c - '0'));
        return Polynomial(field, std::move(v));
    }

    std::map<std::size_t, Element> acc;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' in '" + std::string(text) + "'");
        }
        const std::size_t end = s.find_first_of("+-", pos);
        std::string_view term = std::string_view(s).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end;
        if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");

        std::size_t coefficient = 1;
        std::size_t exponent = 0;
        if (const auto x = term.find('x'); x == std::string_view::npos) {
            coefficient = parse_number(term, text);
        } else {
            std::string_view head = term.substr(0, x);
            if (!head.empty() && head.back() == '*') head.remove_suffix(1);
            if (!head.empty()) coefficient = parse_number(head, text);
            std::string_view rest = term.substr(x + 1);
            if (rest.empty()) {
                exponent = 1;
            } else {
                if (rest.front() != '^') throw ParseError("expected '^' after x in '" + std::string(text) + "'");
                exponent = parse_number(rest.substr(1), text);
            }
        }
        if (coefficient >= field.order())
            throw ParseError("coefficient " + std::to_string(coefficient) + " is not an element of " +
                             field.descriptor());
        if (exponent > kMaxParsedExponent) throw ParseError("exponent too large in '" + std::string(text) + "'");
        Element c = static_cast<Element>(coefficient);
        if (negative) c = field.neg(c);
        acc[exponent] = field.add(acc[exponent], c);
    }

    std::vector<Element> v(acc.rbegin()->first + 1, 0);
    for (auto [e, c] : acc) v[e] = c;
    return Polynomial(field, std::move(v));
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Element c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += 'X';
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string Polynomial::to_coefficient_string() const {
    if (!field_.is_binary()) throw PreconditionError("coefficient strings are only defined over GF(2)");
    if (coeffs_.empty()) return "0";
    std::string out;
    for (Element c : coeffs_) out.push_back(static_cast<char>('0' + c));
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    std::vector<Element> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
    return Polynomial(f, std::move(v));
}

Polynomial operator-(const Polynomial& a) {
    std::vector<Element> v(a.coeffs().begin(), a.coeffs().end());
    for (Element& c : v) c = a.field().neg(c);
    return Polynomial(a.field(), std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Polynomial(f);
    std::vector<Element> v(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] = f.add(v[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return Polynomial(f, std::move(v));
}

Polynomial scale(const Polynomial& a, Element c) {
    std::vector<Element> v(a.coeffs().begin(), a.coeffs().end());
    for (Element& x : v) x = a.field().mul(x, c);
    return Polynomial(a.field(), std::move(v));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Polynomial(f), a};

    std::vector<Element> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Element> quo(a.coeffs().size() - b.coeffs().size() + 1, 0);
    const Element lead_inv = f.inv(b.leading());
    const std::size_t db = b.coeffs().size() - 1;
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        const Element factor = f.mul(rem[i], lead_inv);
        quo[i - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(factor, b.coeffs()[j]));
    }
    return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial monic(const Polynomial& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    return scale(a, a.field().inv(a.leading()));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Element eval(const Polynomial& a, Element x) {
    const Field& f = a.field();
    Element acc = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs()[i]);
    return acc;
}

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) { return (a * b) % m; }

Polynomial powmod(const Polynomial& a, std::uint64_t e, const Polynomial& m) {
    Polynomial result = Polynomial::constant(m.field(), 1) % m;
    Polynomial base = a % m;
    while (e) {
        if (e & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

bool is_irreducible(const Polynomial& a) {
    if (a.degree() < 1) throw PreconditionError("irreducibility is undefined for constant polynomials");
    const Polynomial m = monic(a);
    const auto deg = static_cast<std::uint32_t>(m.degree());
    if (deg == 1) return true;
    const Field& f = m.field();
    const Polynomial x = Polynomial::monomial(f, 1, 1) % m;

    // frobenius[i] = X^{q^i} mod m
    std::vector<Polynomial> frobenius{x};
    for (std::uint32_t i = 1; i <= deg; ++i) frobenius.push_back(powmod(frobenius.back(), f.order(), m));
    if (!(frobenius[deg] == x)) return false;
    for (std::uint32_t r : prime_factors(deg))
        if (!gcd(frobenius[deg / r] - x, m).is_one()) return false;
    return true;
}

std::vector<Polynomial> irreducibles_of_degree(const Field& field, int m) {
    if (m < 1 || m > 10) throw PreconditionError("irreducibles_of_degree requires 1 <= m <= 10");
    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= field.order();
    if (count > (1u << 20)) throw ScaleGuardError("q^m exceeds 2^20 candidates");

    auto monic_from_index = [&](std::uint64_t index, int degree) {
        std::vector<Element> v(static_cast<std::size_t>(degree) + 1, 0);
        for (int i = 0; i < degree; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<Element>(index % field.order());
            index /= field.order();
        }
        v.back() = 1;
        return Polynomial(field, std::move(v));
    };

    std::vector<std::vector<Polynomial>> by_degree(static_cast<std::size_t>(m / 2) + 1);
    for (int dd = 1; dd <= m / 2; ++dd) {
        std::uint64_t n = 1;
        for (int i = 0; i < dd; ++i) n *= field.order();
        for (std::uint64_t idx = 0; idx < n; ++idx) by_degree[static_cast<std::size_t>(dd)].push_back(monic_from_index(idx, dd));
    }

    std::vector<Polynomial> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Polynomial candidate = monic_from_index(idx, m);
        bool reducible = false;
        for (int dd = 1; dd <= m / 2 && !reducible; ++dd)
            for (const Polynomial& divisor : by_degree[static_cast<std::size_t>(dd)])
                if ((candidate % divisor).is_zero()) {
                    reducible = true;
                    break;
                }
        if (!reducible) out.push_back(std::move(candidate));
    }
    return out;
}

std::vector<Polynomial> factor(const Polynomial& a) {
    if (a.is_zero()) throw DomainError("cannot factor the zero polynomial");
    const Field& field = a.field();
    std::uint64_t budget = 1;
    for (int i = 0; i < a.degree() / 2; ++i) {
        budget *= field.order();
        if (budget > (1u << 20)) throw ScaleGuardError("factorization needs more than 2^20 trial divisors");
    }

    std::vector<Polynomial> out;
    Polynomial rest = monic(a);
    for (int dd = 1; 2 * dd <= rest.degree(); ++dd) {
        std::uint64_t n = 1;
        for (int i = 0; i < dd; ++i) n *= field.order();
        for (std::uint64_t idx = 0; idx < n && 2 * dd <= rest.degree(); ++idx) {
            std::vector<Element> v(static_cast<std::size_t>(dd) + 1, 0);
            std::uint64_t k = idx;
            for (int i = 0; i < dd; ++i) {
                v[static_cast<std::size_t>(i)] = static_cast<Element>(k % field.order());
                k /= field.order();
            }
            v.back() = 1;
            const Polynomial divisor(field, std::move(v));
            for (DivMod qr = divmod(rest, divisor); qr.remainder.is_zero(); qr = divmod(rest, divisor)) {
                out.push_back(divisor);
                rest = qr.quotient;
            }
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
    return out;
}

}  // namespace soca
