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

#include "soca/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "soca/checkers.hpp"
#include "soca/errors.hpp"
#include "soca/gf2.hpp"

namespace soca {

namespace {

constexpr std::uint64_t kMaxScanRules = std::uint64_t{1} << 16;
constexpr int kMaxCountDiameter = 24;
constexpr std::uint64_t kMaxCountRules = std::uint64_t{1} << 24;

using LatinTable = std::vector<Element>;  // q*q entries, value at (x_1, x_d)

void extend_latin(std::uint32_t q, LatinTable& cur, std::size_t pos, std::vector<LatinTable>& out) {
    if (pos == cur.size()) {
        out.push_back(cur);
        return;
    }
    const std::size_t r = pos / q;
    const std::size_t c = pos % q;
    for (Element v = 0; v < q; ++v) {
        bool clash = false;
        for (std::size_t k = 0; k < c && !clash; ++k) clash = cur[r * q + k] == v;
        for (std::size_t k = 0; k < r && !clash; ++k) clash = cur[k * q + c] == v;
        if (clash) continue;
        cur[pos] = v;
        extend_latin(q, cur, pos + 1, out);
    }
}

// All Latin squares of order q over {0..q-1}, lexicographic in row-major order.
std::vector<LatinTable> latin_squares(std::uint32_t q) {
    if (q > 5) throw ScaleGuardError("Latin square enumeration is limited to order 5");
    std::vector<LatinTable> out;
    LatinTable cur(std::size_t{q} * q, 0);
    extend_latin(q, cur, 0, out);
    return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

/**
 * Runs work(begin, end, chunk_result) over contiguous chunks of [0, total) on a pool of
 * workers and returns the per-chunk results in index order.
 */
template <class Result, class Work>
std::vector<Result> run_chunked(std::uint64_t total, unsigned workers, Work work) {
    workers = std::max(1u, workers);
    const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t{workers} * 16);
    std::vector<Result> results(static_cast<std::size_t>(chunks));
    if (chunks == 0) return results;
    const std::uint64_t per_chunk = (total + chunks - 1) / chunks;

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            try {
                const std::uint64_t begin = c * per_chunk;
                const std::uint64_t end = std::min(total, begin + per_chunk);
                if (begin < end) work(begin, end, results[static_cast<std::size_t>(c)]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        body();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

struct ScanChunk {
    std::uint64_t n_soca = 0;
    std::uint64_t n_affine = 0;
    std::uint64_t n_linear = 0;
    std::vector<Polynomial> polynomials;
    std::vector<std::uint64_t> nonlinear;
};

class BipermutiveFactory {
   public:
    BipermutiveFactory(const Field& field, int diameter)
        : field_(field), diameter_(diameter), squares_(latin_squares(field.order())) {
        if (diameter < 2) throw PreconditionError("bipermutive rules need d >= 2");
        middles_ = saturating_pow(field.order(), static_cast<std::uint64_t>(diameter - 2));
        count_ = saturating_pow(squares_.size(), middles_);
    }

    std::uint64_t count() const noexcept { return count_; }

    LocalRule make(std::uint64_t index) const {
        if (index >= count_) throw PreconditionError("bipermutive rule index out of range");
        const std::uint64_t q = field_.order();
        const std::uint64_t top = saturating_pow(q, static_cast<std::uint64_t>(diameter_ - 1));
        std::vector<Element> table(static_cast<std::size_t>(top * q));
        for (std::uint64_t mid = 0; mid < middles_; ++mid) {
            const LatinTable& sq = squares_[static_cast<std::size_t>(index % squares_.size())];
            index /= squares_.size();
            for (std::uint64_t a = 0; a < q; ++a)
                for (std::uint64_t b = 0; b < q; ++b) table[static_cast<std::size_t>(a * top + mid * q + b)] = sq[a * q + b];
        }
        return LocalRule(field_, diameter_, std::move(table));
    }

   private:
    Field field_;
    int diameter_;
    std::vector<LatinTable> squares_;
    std::uint64_t middles_ = 0;
    std::uint64_t count_ = 0;
};

bool canonical_less(const Polynomial& a, const Polynomial& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    std::vector<std::pair<std::size_t, Element>> ta;
    std::vector<std::pair<std::size_t, Element>> tb;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeffs()[i]) ta.emplace_back(i, a.coeffs()[i]);
    for (std::size_t i = 0; i < b.coeffs().size(); ++i)
        if (b.coeffs()[i]) tb.emplace_back(i, b.coeffs()[i]);
    return ta < tb;
}

}  // namespace

std::uint64_t latin_square_count(std::uint32_t q) { return latin_squares(q).size(); }

std::uint64_t bipermutive_rule_count(const Field& field, int diameter) {
    return BipermutiveFactory(field, diameter).count();
}

LocalRule bipermutive_rule(const Field& field, int diameter, std::uint64_t index) {
    return BipermutiveFactory(field, diameter).make(index);
}

void enumerate_bipermutive_binary(int diameter, const std::function<void(std::uint64_t, const LocalRule&)>& visit) {
    if (diameter < 3 || diameter > 6) throw ScaleGuardError("binary bipermutive enumeration supports 3 <= d <= 6");
    const BipermutiveFactory factory(Field(), diameter);
    for (std::uint64_t i = 0; i < factory.count(); ++i) visit(i, factory.make(i));
}

void sort_canonical(std::vector<Polynomial>& polys) { std::stable_sort(polys.begin(), polys.end(), canonical_less); }

ScanReport scan_soca(int diameter, const Field& field, ScanOptions options) {
    const auto start = std::chrono::steady_clock::now();
    if (diameter < 2) throw PreconditionError("scans need d >= 2");
    const BipermutiveFactory factory(field, diameter);
    if (!options.override_guard && factory.count() > kMaxScanRules)
        throw ScaleGuardError("scan of " + std::to_string(factory.count()) + " rules exceeds the 2^16 desk-scale guard");
    if (factory.count() == std::numeric_limits<std::uint64_t>::max())
        throw ScaleGuardError("rule space too large to enumerate");

    auto chunks = run_chunked<ScanChunk>(factory.count(), options.workers,
                                         [&](std::uint64_t begin, std::uint64_t end, ScanChunk& out) {
                                             for (std::uint64_t i = begin; i < end; ++i) {
                                                 const LocalRule rule = factory.make(i);
                                                 if (!soca_bruteforce(rule).verdict) continue;
                                                 ++out.n_soca;
                                                 const auto affine = as_affine(rule);
                                                 if (!affine) {
                                                     out.nonlinear.push_back(i);
                                                     continue;
                                                 }
                                                 ++out.n_affine;
                                                 if (affine->constant == 0) {
                                                     ++out.n_linear;
                                                     out.polynomials.push_back(associated_polynomial(affine->linear));
                                                 }
                                             }
                                         });

    ScanReport report;
    report.diameter = diameter;
    report.field = field;
    report.n_bipermutive = factory.count();
    for (ScanChunk& c : chunks) {
        report.n_soca += c.n_soca;
        report.n_affine_soca += c.n_affine;
        report.n_linear_soca += c.n_linear;
        report.n_nonlinear_soca += c.nonlinear.size();
        for (Polynomial& p : c.polynomials) report.polynomials.push_back(std::move(p));
        report.nonlinear_indices.insert(report.nonlinear_indices.end(), c.nonlinear.begin(), c.nonlinear.end());
    }
    sort_canonical(report.polynomials);
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

LinearCountReport count_linear_soca(int d_min, int d_max, const Field& field, ScanOptions options) {
    if (d_min < 2 || d_max < d_min) throw PreconditionError("count-linear needs 2 <= d_min <= d_max");
    LinearCountReport report;
    report.field = field;
    report.method = field.characteristic() == 2 ? "gcd-binary" : "gcd-general";
    const std::uint64_t q = field.order();

    for (int d = d_min; d <= d_max; ++d) {
        const std::uint64_t middles = saturating_pow(q, static_cast<std::uint64_t>(d - 2));
        const std::uint64_t total = middles == std::numeric_limits<std::uint64_t>::max()
                                        ? middles
                                        : saturating_pow(q - 1, 2) * middles;
        if (!options.override_guard && (d > kMaxCountDiameter || total > kMaxCountRules))
            throw ScaleGuardError("count-linear at d = " + std::to_string(d) + " exceeds the desk-scale guard");

        std::uint64_t count = 0;
        if (field.is_binary() && d < 63) {
            const gf2::Packed target = (gf2::Packed{1} << (d - 1)) | 1;
            const gf2::Packed ends = (gf2::Packed{1} << (d - 1)) | 1;
            const auto chunks = run_chunked<std::uint64_t>(middles, options.workers,
                                                           [&](std::uint64_t begin, std::uint64_t end, std::uint64_t& out) {
                                                               for (std::uint64_t mid = begin; mid < end; ++mid)
                                                                   if (gf2::gcd(target, ends | (mid << 1)) == 1) ++out;
                                                           });
            for (std::uint64_t c : chunks) count += c;
        } else {
            const auto chunks = run_chunked<std::uint64_t>(total, options.workers,
                                                           [&](std::uint64_t begin, std::uint64_t end, std::uint64_t& out) {
                                                               std::vector<Element> coeffs(static_cast<std::size_t>(d));
                                                               for (std::uint64_t i = begin; i < end; ++i) {
                                                                   std::uint64_t rest = i;
                                                                   coeffs.front() = static_cast<Element>(1 + rest % (q - 1));
                                                                   rest /= q - 1;
                                                                   coeffs.back() = static_cast<Element>(1 + rest % (q - 1));
                                                                   rest /= q - 1;
                                                                   for (int k = 1; k + 1 < d; ++k) {
                                                                       coeffs[static_cast<std::size_t>(k)] = static_cast<Element>(rest % q);
                                                                       rest /= q;
                                                                   }
                                                                   const LinearRule rule(field, coeffs);
                                                                   const bool ok = field.characteristic() == 2 ? soca_binary_fast(rule).verdict
                                                                                                               : soca_linear_fast(rule).verdict;
                                                                   if (ok) ++out;
                                                               }
                                                           });
            for (std::uint64_t c : chunks) count += c;
        }
        report.counts.emplace_back(d, count);
    }
    return report;
}

std::vector<LocalRule> find_nonlinear_soca(int diameter, const Field& field, ScanOptions options) {
    const ScanReport report = scan_soca(diameter, field, options);
    const BipermutiveFactory factory(field, diameter);
    std::vector<LocalRule> out;
    for (std::uint64_t i : report.nonlinear_indices) out.push_back(factory.make(i));
    return out;
}

}  // namespace soca
