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

#include "soca/checkers.hpp"

#include <array>
#include <bit>

#include "soca/errors.hpp"
#include "soca/gf2.hpp"
#include "soca/stacked.hpp"

namespace soca {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 6> kMethodNames = {{
    {Method::Bruteforce, "bruteforce"},
    {Method::StackedMatrix, "stacked-matrix"},
    {Method::GcdGeneral, "gcd-general"},
    {Method::GcdBinary, "gcd-binary"},
    {Method::Parity, "parity"},
    {Method::IrreducibleSufficient, "irreducible-sufficient"},
}};

void require_bipermutive(const LinearRule& rule) {
    if (rule.diameter() < 2 || !rule.is_bipermutive())
        throw PreconditionError(rule.to_string() + " is not bipermutive (a_1 and a_d must be nonzero, d >= 2)");
}

void require_char2(const LinearRule& rule, std::string_view method) {
    if (rule.field().characteristic() != 2)
        throw PreconditionError(std::string(method) + " needs a field of characteristic 2");
}

SocaVerdict from_gcd(Method method, Polynomial g) {
    SocaVerdict v;
    v.method = method;
    v.verdict = g.is_one();
    if (!v.verdict) v.gcd = std::move(g);
    return v;
}

// Packed fast path for GF(2); the generic Polynomial route is the reference.
Polynomial gcd_with_x_pow_plus_one(const LinearRule& rule, std::size_t n) {
    if (rule.field().is_binary() && n < 63 && rule.diameter() < 64) {
        gf2::Packed p = 0;
        for (std::size_t i = 0; i < rule.coeffs().size(); ++i)
            if (rule.coeffs()[i]) p |= gf2::Packed{1} << i;
        return gf2::unpack(gf2::gcd((gf2::Packed{1} << n) | 1, p));
    }
    return gcd(associated_polynomial(rule), Polynomial::x_pow_minus_one(rule.field(), n));
}

struct LinearView {
    LinearRule rule;
    Element constant;
};

std::optional<LinearView> linear_view(const LocalRule& rule) {
    auto affine = as_affine(rule);
    if (!affine) return std::nullopt;
    return LinearView{std::move(affine->linear), affine->constant};
}

void annotate(SocaVerdict& v, const LinearView& view) {
    if (view.constant) v.note = "evaluated on the linear part of an affine rule (constant " + std::to_string(view.constant) + ")";
}

}  // namespace

std::string_view method_name(Method method) noexcept {
    for (auto [m, name] : kMethodNames)
        if (m == method) return name;
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
    for (auto [m, n] : kMethodNames)
        if (n == name) return m;
    return std::nullopt;
}

SocaVerdict soca_bruteforce(const LocalRule& rule) {
    if (rule.diameter() < 2 || !is_bipermutive(rule))
        throw PreconditionError("self-orthogonality is only defined for bipermutive rules");
    const LatinSquare square = cayley_table(rule);
    if (!is_latin(square)) throw ConsistencyError("Cayley table of a bipermutive rule is not Latin");
    const OrthogonalityResult result = is_self_orthogonal(square);
    SocaVerdict v;
    v.method = Method::Bruteforce;
    v.verdict = result.orthogonal;
    v.cells = result.collision;
    return v;
}

SocaVerdict soca_stacked_matrix(const LinearRule& rule) {
    require_bipermutive(rule);
    const Matrix stacked = stacked_matrix(rule);
    SocaVerdict v;
    v.method = Method::StackedMatrix;
    v.verdict = is_invertible(stacked);
    if (!v.verdict) {
        // A kernel vector x||y maps to (0, 0) just like 0||0, so cells (1, 1) and
        // (phi(x), phi(y)) carry the same superposed pair.
        const auto kernel = null_vector(stacked);
        if (!kernel) throw ConsistencyError("singular stacked matrix without a kernel vector");
        const auto m = static_cast<std::size_t>(rule.diameter() - 1);
        const EncodingMap phi(rule.field(), static_cast<int>(m));
        const std::span<const Element> x(*kernel);
        v.cells = std::make_pair(Cell{1, 1}, Cell{phi.encode(x.first(m)), phi.encode(x.subspan(m))});
    }
    return v;
}

SocaVerdict soca_linear_fast(const LinearRule& rule) {
    require_bipermutive(rule);
    const auto n = static_cast<std::size_t>(2 * (rule.diameter() - 1));
    return from_gcd(Method::GcdGeneral, gcd(associated_polynomial(rule), Polynomial::x_pow_minus_one(rule.field(), n)));
}

SocaVerdict soca_binary_fast(const LinearRule& rule) {
    require_bipermutive(rule);
    require_char2(rule, "gcd-binary");
    return from_gcd(Method::GcdBinary, gcd_with_x_pow_plus_one(rule, static_cast<std::size_t>(rule.diameter() - 1)));
}

SocaVerdict soca_parity(const LinearRule& rule) {
    require_bipermutive(rule);
    require_char2(rule, "parity");
    if (!std::has_single_bit(static_cast<unsigned>(rule.diameter() - 1)))
        throw PreconditionError("the parity test needs d - 1 to be a power of two");
    SocaVerdict v;
    v.method = Method::Parity;
    v.verdict = eval(associated_polynomial(rule), 1) != 0;
    // p_f(1) = 0 means X + 1 divides both p_f and X^{d-1} + 1.
    if (!v.verdict) v.gcd = Polynomial(rule.field(), {1, 1});
    return v;
}

std::optional<SocaVerdict> irreducible_implies_soca(const LinearRule& rule) {
    require_bipermutive(rule);
    require_char2(rule, "irreducible-sufficient");
    if (rule.diameter() <= 2) throw PreconditionError("the irreducibility criterion needs d > 2");
    if (!is_irreducible(associated_polynomial(rule))) return std::nullopt;
    SocaVerdict v;
    v.method = Method::IrreducibleSufficient;
    v.verdict = true;
    return v;
}

SocaVerdict soca_check(const LinearRule& rule, Method method) {
    switch (method) {
        case Method::Bruteforce:
            require_bipermutive(rule);
            return soca_bruteforce(rule_from_linear(rule));
        case Method::StackedMatrix: return soca_stacked_matrix(rule);
        case Method::GcdGeneral: return soca_linear_fast(rule);
        case Method::GcdBinary: return soca_binary_fast(rule);
        case Method::Parity: return soca_parity(rule);
        case Method::IrreducibleSufficient: {
            auto r = irreducible_implies_soca(rule);
            if (!r) throw PreconditionError("p_f is reducible; the irreducibility criterion gives no verdict");
            return *r;
        }
    }
    throw PreconditionError("unknown method");
}

SocaVerdict soca_check(const LocalRule& rule, Method method) {
    if (method == Method::Bruteforce) return soca_bruteforce(rule);
    if (rule.diameter() < 2 || !is_bipermutive(rule))
        throw PreconditionError("self-orthogonality is only defined for bipermutive rules");
    const auto view = linear_view(rule);
    if (!view) throw PreconditionError(std::string(method_name(method)) + " applies to linear or affine rules only");
    SocaVerdict v = soca_check(view->rule, method);
    annotate(v, *view);
    return v;
}

bool pbca_invertible(const LinearRule& rule, std::size_t n) {
    return is_invertible(pbca_transition_circulant(rule, n));
}

bool oca_pair_check(const LinearRule& a, const LinearRule& b, PairMode mode) {
    if (!(a.field() == b.field())) throw PreconditionError("rules over different fields");
    if (a.diameter() != b.diameter()) throw PreconditionError("rules of different diameters");
    require_bipermutive(a);
    require_bipermutive(b);
    if (mode == PairMode::Fast) return gcd(associated_polynomial(a), associated_polynomial(b)).is_one();
    return are_orthogonal(cayley_table(rule_from_linear(a)), cayley_table(rule_from_linear(b))).orthogonal;
}

AuditReport audit(const LocalRule& rule) {
    if (rule.diameter() < 2 || !is_bipermutive(rule))
        throw PreconditionError("self-orthogonality is only defined for bipermutive rules");
    AuditReport report;

    std::uint64_t cells = 1;
    bool bruteforce_ok = true;
    for (int i = 0; i < 2 * (rule.diameter() - 1) && bruteforce_ok; ++i) {
        cells *= rule.field().order();
        bruteforce_ok = cells <= kMaxCayleyCells;
    }
    if (bruteforce_ok)
        report.log.push_back(soca_bruteforce(rule));
    else
        report.skipped.emplace_back("bruteforce: Cayley table exceeds 2^26 cells");

    if (const auto view = linear_view(rule)) {
        const LinearRule& lr = view->rule;
        const std::size_t first_linear = report.log.size();
        report.log.push_back(soca_stacked_matrix(lr));
        report.log.push_back(soca_linear_fast(lr));
        if (lr.field().characteristic() == 2) {
            report.log.push_back(soca_binary_fast(lr));
            if (std::has_single_bit(static_cast<unsigned>(lr.diameter() - 1)))
                report.log.push_back(soca_parity(lr));
            else
                report.skipped.emplace_back("parity: d - 1 is not a power of two");
            if (lr.diameter() > 2) {
                if (auto v = irreducible_implies_soca(lr))
                    report.log.push_back(*v);
                else
                    report.skipped.emplace_back("irreducible-sufficient: p_f is reducible");
            } else {
                report.skipped.emplace_back("irreducible-sufficient: needs d > 2");
            }
        } else {
            report.skipped.emplace_back("gcd-binary, parity, irreducible-sufficient: odd characteristic");
        }
        for (std::size_t i = first_linear; i < report.log.size(); ++i) annotate(report.log[i], *view);
    } else {
        report.skipped.emplace_back("linear methods: rule is not affine");
    }

    if (report.log.empty()) throw PreconditionError("no applicable method for this rule");
    report.verdict = report.log.front().verdict;
    for (const SocaVerdict& v : report.log) {
        if (v.verdict == report.verdict) continue;
        std::string msg = "methods disagree:";
        for (const SocaVerdict& w : report.log)
            msg += " " + std::string(method_name(w.method)) + "=" + (w.verdict ? "true" : "false");
        throw ConsistencyError(msg);
    }
    return report;
}

}  // namespace soca
