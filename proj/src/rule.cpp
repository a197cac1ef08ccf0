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

#include "soca/rule.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "soca/errors.hpp"

namespace soca {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t{1} << kMaxTableDiameter;

std::size_t table_size(const Field& field, int diameter) {
    std::size_t size = 1;
    for (int i = 0; i < diameter; ++i) {
        size *= field.order();
        if (size > kMaxTableSize) throw ScaleGuardError("rule table exceeds 2^24 entries");
    }
    return size;
}

void require_binary(const Field& field, std::string_view what) {
    if (!field.is_binary()) throw PreconditionError(std::string(what) + " is only defined over GF(2)");
}

// Little-endian bit vector of a nonnegative decimal string.
std::vector<std::uint8_t> decimal_to_bits(std::string_view s) {
    std::vector<std::uint8_t> digits;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("invalid decimal rule code '" + std::string(s) + "'");
        digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (digits.empty()) throw ParseError("empty rule code");
    std::vector<std::uint8_t> bits;
    std::size_t start = 0;
    while (start < digits.size()) {
        unsigned carry = 0;
        for (std::size_t i = start; i < digits.size(); ++i) {
            const unsigned cur = carry * 10 + digits[i];
            digits[i] = static_cast<std::uint8_t>(cur / 2);
            carry = cur % 2;
        }
        bits.push_back(static_cast<std::uint8_t>(carry));
        while (start < digits.size() && digits[start] == 0) ++start;
    }
    return bits;
}

std::vector<std::uint8_t> hex_to_bits(std::string_view s) {
    if (s.empty()) throw ParseError("empty hex rule code");
    std::vector<std::uint8_t> bits;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
        unsigned v = 0;
        if (c >= '0' && c <= '9')
            v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v = static_cast<unsigned>(c - 'a' + 10);
        else
            throw ParseError("invalid hex rule code '" + std::string(s) + "'");
        for (int b = 0; b < 4; ++b) bits.push_back(static_cast<std::uint8_t>((v >> b) & 1));
    }
    return bits;
}

LocalRule rule_from_bits(const std::vector<std::uint8_t>& bits, int diameter) {
    if (diameter < 1 || diameter > kMaxTableDiameter)
        throw PreconditionError("diameter must lie in 1.." + std::to_string(kMaxTableDiameter));
    const std::size_t size = std::size_t{1} << diameter;
    for (std::size_t i = size; i < bits.size(); ++i)
        if (bits[i]) throw PreconditionError("rule code out of range for diameter " + std::to_string(diameter));
    std::vector<Element> table(size, 0);
    for (std::size_t i = 0; i < std::min(size, bits.size()); ++i) table[i] = bits[i];
    return LocalRule(Field(), diameter, std::move(table));
}

std::string join(std::span<const Element> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

LocalRule::LocalRule(const Field& field, int diameter, std::vector<Element> table)
    : field_(field), diameter_(diameter), table_(std::move(table)) {
    if (diameter < 1) throw PreconditionError("diameter must be at least 1");
    if (table_.size() != table_size(field, diameter))
        throw PreconditionError("rule table must have q^d entries");
    for (Element e : table_)
        if (!field_.contains(e)) throw PreconditionError("rule output outside " + field_.descriptor());
}

Element LocalRule::operator()(std::span<const Element> neighborhood) const {
    if (neighborhood.size() != static_cast<std::size_t>(diameter_))
        throw PreconditionError("neighborhood length differs from the diameter");
    std::size_t index = 0;
    for (Element x : neighborhood) {
        if (!field_.contains(x)) throw PreconditionError("cell value outside " + field_.descriptor());
        index = index * field_.order() + x;
    }
    return table_[index];
}

std::string LocalRule::wolfram_code() const {
    require_binary(field_, "Wolfram code");
    std::vector<std::uint32_t> limbs{0};  // base 1e9, little-endian
    constexpr std::uint32_t kBase = 1000000000;
    for (std::size_t i = table_.size(); i-- > 0;) {
        std::uint32_t carry = table_[i];
        for (auto& limb : limbs) {
            const std::uint64_t cur = std::uint64_t{limb} * 2 + carry;
            limb = static_cast<std::uint32_t>(cur % kBase);
            carry = static_cast<std::uint32_t>(cur / kBase);
        }
        if (carry) limbs.push_back(carry);
    }
    std::string out = std::to_string(limbs.back());
    for (std::size_t i = limbs.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

std::string LocalRule::wolfram_hex() const {
    require_binary(field_, "Wolfram code");
    std::string out;
    for (std::size_t nibble = (table_.size() + 3) / 4; nibble-- > 0;) {
        unsigned v = 0;
        for (unsigned b = 0; b < 4; ++b) {
            const std::size_t i = nibble * 4 + b;
            if (i < table_.size() && table_[i]) v |= 1u << b;
        }
        if (out.empty() && v == 0 && nibble != 0) continue;
        out.push_back("0123456789abcdef"[v]);
    }
    return out;
}

LinearRule::LinearRule(const Field& field, std::vector<Element> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("a linear rule needs at least one coefficient");
    for (Element c : coeffs_)
        if (!field_.contains(c)) throw PreconditionError("coefficient outside " + field_.descriptor());
}

LinearRule LinearRule::parse(const Field& field, std::string_view text) {
    if (text.starts_with("linear:")) text.remove_prefix(7);
    std::vector<Element> coeffs;
    while (true) {
        const auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        Element v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw ParseError("malformed linear rule coefficient '" + std::string(item) + "'");
        if (!field.contains(v)) throw ParseError("coefficient " + std::to_string(v) + " is not in " + field.descriptor());
        coeffs.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return LinearRule(field, std::move(coeffs));
}

Element LinearRule::operator()(std::span<const Element> neighborhood) const {
    if (neighborhood.size() != coeffs_.size()) throw PreconditionError("neighborhood length differs from the diameter");
    Element acc = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) acc = field_.add(acc, field_.mul(coeffs_[i], neighborhood[i]));
    return acc;
}

std::string LinearRule::to_string() const { return "linear:" + join(coeffs_); }

int AnfForm::degree() const noexcept {
    int best = -1;
    for (std::size_t u = 0; u < coeffs.size(); ++u)
        if (coeffs[u]) best = std::max(best, std::popcount(u));
    return best;
}

std::string AnfForm::to_string() const {
    // Monomials by degree, then by variable indices, so x1 comes before x2.
    std::vector<std::pair<int, std::vector<int>>> terms;
    for (std::size_t u = 0; u < coeffs.size(); ++u) {
        if (!coeffs[u]) continue;
        std::vector<int> vars;
        for (int i = 1; i <= diameter; ++i)
            if ((u >> (diameter - i)) & 1u) vars.push_back(i);
        terms.emplace_back(static_cast<int>(vars.size()), std::move(vars));
    }
    std::sort(terms.begin(), terms.end());
    std::string out;
    for (const auto& [degree, vars] : terms) {
        if (!out.empty()) out += '+';
        if (degree == 0) out += '1';
        for (int i : vars) out += "x" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

LocalRule rule_from_wolfram(std::uint64_t code, int diameter) {
    std::vector<std::uint8_t> bits;
    for (; code; code >>= 1) bits.push_back(static_cast<std::uint8_t>(code & 1));
    return rule_from_bits(bits, diameter);
}

LocalRule rule_from_wolfram(std::string_view code, int diameter) {
    if (code.starts_with("0x") || code.starts_with("0X")) return rule_from_bits(hex_to_bits(code.substr(2)), diameter);
    if (code.size() > 20000) throw ScaleGuardError("decimal rule codes are limited to 20000 digits; use hex");
    return rule_from_bits(decimal_to_bits(code), diameter);
}

LocalRule rule_from_linear(const LinearRule& rule) {
    const Field& f = rule.field();
    const int d = rule.diameter();
    const std::size_t size = table_size(f, d);
    std::vector<Element> table(size);
    Configuration x(static_cast<std::size_t>(d), 0);
    for (std::size_t index = 0; index < size; ++index) {
        std::size_t rest = index;
        for (int i = d - 1; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = static_cast<Element>(rest % f.order());
            rest /= f.order();
        }
        table[index] = rule(x);
    }
    return LocalRule(f, d, std::move(table));
}

bool is_permutive(const LocalRule& rule, int coordinate) {
    const int d = rule.diameter();
    if (coordinate < 1 || coordinate > d) throw PreconditionError("coordinate must lie in 1..d");
    const std::size_t q = rule.field().order();
    std::size_t stride = 1;
    for (int i = coordinate; i < d; ++i) stride *= q;

    std::vector<std::uint8_t> seen(q);
    for (std::size_t base = 0; base < rule.table().size(); ++base) {
        if ((base / stride) % q != 0) continue;
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t a = 0; a < q; ++a) {
            const Element v = rule.at(base + a * stride);
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

bool is_bipermutive(const LocalRule& rule) {
    return is_permutive(rule, 1) && is_permutive(rule, rule.diameter());
}

AnfForm anf(const LocalRule& rule) {
    require_binary(rule.field(), "the algebraic normal form");
    AnfForm form{rule.diameter(), {}};
    form.coeffs.assign(rule.table().begin(), rule.table().end());
    for (std::size_t bit = 1; bit < form.coeffs.size(); bit <<= 1)
        for (std::size_t u = 0; u < form.coeffs.size(); ++u)
            if (u & bit) form.coeffs[u] ^= form.coeffs[u ^ bit];
    return form;
}

LocalRule rule_from_anf(const AnfForm& form) {
    if (form.coeffs.size() != (std::size_t{1} << form.diameter)) throw PreconditionError("ANF size must be 2^d");
    std::vector<Element> table(form.coeffs.begin(), form.coeffs.end());
    // The Mobius transform is an involution over GF(2).
    for (std::size_t bit = 1; bit < table.size(); bit <<= 1)
        for (std::size_t u = 0; u < table.size(); ++u)
            if (u & bit) table[u] ^= table[u ^ bit];
    return LocalRule(Field(), form.diameter, std::move(table));
}

std::optional<LinearRule> as_linear(const LocalRule& rule) {
    const Field& f = rule.field();
    const int d = rule.diameter();
    if (f.is_binary()) {
        const AnfForm form = anf(rule);
        if (form.degree() > 1 || form.constant()) return std::nullopt;
        std::vector<Element> coeffs(static_cast<std::size_t>(d));
        for (int i = 1; i <= d; ++i) coeffs[static_cast<std::size_t>(i - 1)] = form.coeffs[std::size_t{1} << (d - i)];
        return LinearRule(f, std::move(coeffs));
    }
    std::vector<Element> coeffs(static_cast<std::size_t>(d));
    std::size_t unit = 1;
    for (int i = d; i >= 1; --i) {
        coeffs[static_cast<std::size_t>(i - 1)] = rule.at(unit);
        unit *= f.order();
    }
    LinearRule candidate(f, std::move(coeffs));
    if (rule_from_linear(candidate) == rule) return candidate;
    return std::nullopt;
}

std::optional<AffineRule> as_affine(const LocalRule& rule) {
    const Field& f = rule.field();
    const Element c = rule.at(0);
    std::vector<Element> shifted(rule.table().begin(), rule.table().end());
    for (Element& v : shifted) v = f.sub(v, c);
    auto linear = as_linear(LocalRule(f, rule.diameter(), std::move(shifted)));
    if (!linear) return std::nullopt;
    return AffineRule{std::move(*linear), c};
}

LocalRule complement(const LocalRule& rule) {
    require_binary(rule.field(), "the complement");
    std::vector<Element> table(rule.table().begin(), rule.table().end());
    for (Element& v : table) v ^= 1;
    return LocalRule(rule.field(), rule.diameter(), std::move(table));
}

Configuration nbca_eval(const LocalRule& rule, std::span<const Element> x) {
    const auto d = static_cast<std::size_t>(rule.diameter());
    if (x.size() < d) throw PreconditionError("NBCA input is shorter than the diameter");
    Configuration out(x.size() - d + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = rule(x.subspan(i, d));
    return out;
}

Configuration pbca_eval(const LocalRule& rule, std::span<const Element> x) {
    if (x.empty()) throw PreconditionError("PBCA input must be nonempty");
    const auto d = static_cast<std::size_t>(rule.diameter());
    const std::size_t n = x.size();
    Configuration out(n);
    Configuration window(d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) window[j] = x[(i + j) % n];
        out[i] = rule(window);
    }
    return out;
}

Polynomial associated_polynomial(const LinearRule& rule) {
    return Polynomial(rule.field(), std::vector<Element>(rule.coeffs().begin(), rule.coeffs().end()));
}

Matrix transition_matrix(const LinearRule& rule, std::size_t n) {
    const auto d = static_cast<std::size_t>(rule.diameter());
    if (n < d) throw PreconditionError("transition matrix needs n >= d");
    Matrix m(rule.field(), n - d + 1, n);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t i = 0; i < d; ++i) m.set(r, r + i, rule.coeffs()[i]);
    return m;
}

}  // namespace soca
