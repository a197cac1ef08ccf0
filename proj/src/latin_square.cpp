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

#include "soca/latin_square.hpp"

#include "soca/errors.hpp"

namespace soca {

EncodingMap::EncodingMap(const Field& field, int block_length, DigitOrder order)
    : field_(field), block_length_(block_length), order_(order), size_(1) {
    if (block_length < 0) throw PreconditionError("negative block length");
    for (int i = 0; i < block_length; ++i) {
        if (std::uint64_t{size_} * field.order() > (std::uint64_t{1} << 31))
            throw ScaleGuardError("encoding map too large");
        size_ *= field.order();
    }
}

std::uint32_t EncodingMap::encode(std::span<const Element> block) const {
    if (block.size() != static_cast<std::size_t>(block_length_)) throw PreconditionError("block length mismatch");
    std::uint32_t value = 0;
    for (std::size_t k = 0; k < block.size(); ++k) {
        const std::size_t i = order_ == DigitOrder::LittleEndian ? block.size() - 1 - k : k;
        if (!field_.contains(block[i])) throw PreconditionError("cell value outside " + field_.descriptor());
        value = value * field_.order() + block[i];
    }
    return value + 1;
}

Configuration EncodingMap::decode(std::uint32_t symbol) const {
    if (symbol < 1 || symbol > size_) throw PreconditionError("symbol outside 1..N");
    Configuration block(static_cast<std::size_t>(block_length_));
    std::uint32_t rest = symbol - 1;
    for (std::size_t k = 0; k < block.size(); ++k) {
        const std::size_t i = order_ == DigitOrder::LittleEndian ? k : block.size() - 1 - k;
        block[i] = rest % field_.order();
        rest /= field_.order();
    }
    return block;
}

LatinSquare::LatinSquare(std::uint32_t order, std::vector<std::uint32_t> grid) : order_(order), grid_(std::move(grid)) {
    if (grid_.size() != std::size_t{order} * order) throw PreconditionError("grid must have N*N entries");
    for (std::uint32_t s : grid_)
        if (s < 1 || s > order) throw PreconditionError("grid entries must lie in 1..N");
}

LatinSquare::LatinSquare(const std::vector<std::vector<std::uint32_t>>& rows)
    : order_(static_cast<std::uint32_t>(rows.size())) {
    for (const auto& r : rows) {
        if (r.size() != rows.size()) throw PreconditionError("grid must be square");
        for (std::uint32_t s : r) {
            if (s < 1 || s > order_) throw PreconditionError("grid entries must lie in 1..N");
            grid_.push_back(s);
        }
    }
}

std::vector<std::vector<std::uint32_t>> LatinSquare::rows() const {
    std::vector<std::vector<std::uint32_t>> out(order_);
    for (std::uint32_t r = 0; r < order_; ++r)
        out[r].assign(grid_.begin() + r * order_, grid_.begin() + (r + 1) * order_);
    return out;
}

std::string LatinSquare::to_csv() const {
    std::string out;
    for (std::uint32_t r = 1; r <= order_; ++r) {
        for (std::uint32_t c = 1; c <= order_; ++c) {
            if (c > 1) out += ',';
            out += std::to_string(at(r, c));
        }
        out += '\n';
    }
    return out;
}

LatinSquare cayley_table(const LocalRule& rule, DigitOrder order) {
    const int d = rule.diameter();
    if (d < 2) throw PreconditionError("Cayley tables need diameter d >= 2");
    const Field& f = rule.field();
    const auto m = static_cast<std::size_t>(d - 1);
    const std::uint64_t q = f.order();
    std::uint64_t cells = 1;
    for (std::size_t i = 0; i < 2 * m; ++i) {
        cells *= q;
        if (cells > kMaxCayleyCells) throw ScaleGuardError("Cayley table exceeds 2^26 cells");
    }
    const EncodingMap phi(f, static_cast<int>(m), order);
    const std::uint32_t n = phi.size();
    const std::uint64_t window_mod = rule.table().size();

    std::vector<Configuration> blocks(n);
    for (std::uint32_t s = 1; s <= n; ++s) blocks[s - 1] = phi.decode(s);

    std::vector<std::uint32_t> grid(std::size_t{n} * n);
    Configuration input(2 * m);
    Configuration output(m);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::copy(blocks[i].begin(), blocks[i].end(), input.begin());
        for (std::uint32_t j = 0; j < n; ++j) {
            std::copy(blocks[j].begin(), blocks[j].end(), input.begin() + static_cast<std::ptrdiff_t>(m));
            // Sliding radix-q index of the neighborhood x_k..x_{k+d-1}.
            std::uint64_t index = 0;
            for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(d); ++k) index = index * q + input[k];
            for (std::size_t k = 0; k < m; ++k) {
                index = (index * q + input[k + m]) % window_mod;
                output[k] = rule.at(index);
            }
            grid[std::size_t{i} * n + j] = phi.encode(output);
        }
    }
    return LatinSquare(n, std::move(grid));
}

bool is_latin(const LatinSquare& square) {
    const std::uint32_t n = square.order();
    std::vector<std::uint32_t> seen(n + 1, 0);
    std::uint32_t stamp = 0;
    for (std::uint32_t r = 1; r <= n; ++r) {
        ++stamp;
        for (std::uint32_t c = 1; c <= n; ++c) {
            const std::uint32_t s = square.at(r, c);
            if (seen[s] == stamp) return false;
            seen[s] = stamp;
        }
    }
    for (std::uint32_t c = 1; c <= n; ++c) {
        ++stamp;
        for (std::uint32_t r = 1; r <= n; ++r) {
            const std::uint32_t s = square.at(r, c);
            if (seen[s] == stamp) return false;
            seen[s] = stamp;
        }
    }
    return true;
}

LatinSquare transpose(const LatinSquare& square) {
    const std::uint32_t n = square.order();
    std::vector<std::uint32_t> grid(std::size_t{n} * n);
    for (std::uint32_t r = 1; r <= n; ++r)
        for (std::uint32_t c = 1; c <= n; ++c) grid[std::size_t{c - 1} * n + (r - 1)] = square.at(r, c);
    return LatinSquare(n, std::move(grid));
}

OrthogonalityResult are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) throw PreconditionError("orthogonality needs squares of equal order");
    const std::uint32_t n = a.order();
    // first_cell[(a-1)*N + (b-1)] = 1 + linear index of the first cell carrying the pair (a, b)
    std::vector<std::uint32_t> first_cell(std::size_t{n} * n, 0);
    for (std::uint32_t r = 1; r <= n; ++r)
        for (std::uint32_t c = 1; c <= n; ++c) {
            const std::size_t code = std::size_t{a.at(r, c) - 1} * n + (b.at(r, c) - 1);
            const std::uint32_t here = (r - 1) * n + c;
            if (first_cell[code]) {
                const std::uint32_t prev = first_cell[code] - 1;
                return {false, std::make_pair(Cell{prev / n + 1, prev % n + 1}, Cell{r, c})};
            }
            first_cell[code] = here;
        }
    return {true, std::nullopt};
}

OrthogonalityResult is_self_orthogonal(const LatinSquare& square) { return are_orthogonal(square, transpose(square)); }

std::string superposition_grid(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) throw PreconditionError("superposition needs squares of equal order");
    std::string out;
    for (std::uint32_t r = 1; r <= a.order(); ++r) {
        for (std::uint32_t c = 1; c <= a.order(); ++c) {
            if (c > 1) out += ' ';
            out += std::to_string(a.at(r, c)) + "," + std::to_string(b.at(r, c));
        }
        out += '\n';
    }
    return out;
}

}  // namespace soca
