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

#ifndef SOCA_LATIN_SQUARE_HPP
#define SOCA_LATIN_SQUARE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "soca/rule.hpp"

namespace soca {

/// Cayley tables are limited to q^{2(d-1)} <= 2^26 cells.
inline constexpr std::uint64_t kMaxCayleyCells = std::uint64_t{1} << 26;

enum class DigitOrder {
    LittleEndian,  // first cell of the block is the least significant digit
    BigEndian,
};

/**
 * Monotone bijection between blocks of m cells over F_q and the symbols 1..q^m.
 * The default little-endian order maps 00 -> 1, 10 -> 2, 01 -> 3, 11 -> 4 over GF(2).
 */
class EncodingMap {
   public:
    EncodingMap(const Field& field, int block_length, DigitOrder order = DigitOrder::LittleEndian);

    std::uint32_t size() const noexcept { return size_; }
    int block_length() const noexcept { return block_length_; }

    std::uint32_t encode(std::span<const Element> block) const;
    Configuration decode(std::uint32_t symbol) const;

   private:
    Field field_;
    int block_length_;
    DigitOrder order_;
    std::uint32_t size_;
};

/// 1-based row and column.
struct Cell {
    std::uint32_t row;
    std::uint32_t col;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/**
 * N x N grid of symbols 1..N. The Latin property is not enforced by construction; use
 * is_latin(). Rows, columns and symbols are all 1-based.
 */
class LatinSquare {
   public:
    LatinSquare(std::uint32_t order, std::vector<std::uint32_t> grid);
    LatinSquare(const std::vector<std::vector<std::uint32_t>>& rows);

    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t at(std::uint32_t row, std::uint32_t col) const noexcept {
        return grid_[(row - 1) * order_ + (col - 1)];
    }
    std::span<const std::uint32_t> grid() const noexcept { return grid_; }
    std::vector<std::vector<std::uint32_t>> rows() const;

    std::string to_csv() const;

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

   private:
    std::uint32_t order_;
    std::vector<std::uint32_t> grid_;
};

/// C_F(i, j) = phi(F(psi(i) || psi(j))) for the NBCA F: F_q^{2(d-1)} -> F_q^{d-1}.
LatinSquare cayley_table(const LocalRule& rule, DigitOrder order = DigitOrder::LittleEndian);

bool is_latin(const LatinSquare& square);

LatinSquare transpose(const LatinSquare& square);

struct OrthogonalityResult {
    bool orthogonal = false;
    /// Two distinct cells whose superposed pairs coincide; set iff !orthogonal.
    std::optional<std::pair<Cell, Cell>> collision;
};

/// Superposition check over all N^2 ordered pairs. Throws PreconditionError on order mismatch.
OrthogonalityResult are_orthogonal(const LatinSquare& a, const LatinSquare& b);

OrthogonalityResult is_self_orthogonal(const LatinSquare& square);

/// Rows of "a,b" cells separated by spaces, one line per row.
std::string superposition_grid(const LatinSquare& a, const LatinSquare& b);

}  // namespace soca

#endif
