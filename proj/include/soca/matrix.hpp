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

#ifndef SOCA_MATRIX_HPP
#define SOCA_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "soca/field.hpp"
#include "soca/polynomial.hpp"

namespace soca {

/// Dense row-major matrix over F_q.
class Matrix {
   public:
    Matrix() = default;
    Matrix(const Field& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
    Matrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Element> entries);
    /// Convenience for literals and tests.
    Matrix(const Field& field, const std::vector<std::vector<Element>>& rows);

    static Matrix identity(const Field& field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Element operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Element v);
    std::span<const Element> row(std::size_t r) const noexcept {
        return std::span<const Element>(entries_).subspan(r * cols_, cols_);
    }
    std::span<const Element> entries() const noexcept { return entries_; }

    /// One line per row, comma-separated.
    std::string to_csv() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Matrix-vector product M * x^T.
std::vector<Element> apply(const Matrix& m, std::span<const Element> x);

/// Rank by Gaussian elimination (bit-packed XOR elimination over GF(2)).
std::size_t rank(const Matrix& m);

/// Full-rank test for square matrices; throws PreconditionError otherwise.
bool is_invertible(const Matrix& m);

/// A nonzero x with M x^T = 0, if the columns of M are dependent.
std::optional<std::vector<Element>> null_vector(const Matrix& m);

/**
 * n x n circulant matrix over F_q given by its first row; row i+1 is the cyclic right
 * shift of row i, so entry (i, j) is first_row[(j - i) mod n].
 */
class Circulant {
   public:
    Circulant(const Field& field, std::vector<Element> first_row);

    /// Reduces c modulo X^n - 1 and reads off the first row.
    static Circulant from_polynomial(const Polynomial& c, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return first_row_.size(); }
    std::span<const Element> first_row() const noexcept { return first_row_; }

    Matrix expand() const;
    /// The ring isomorphism onto F_q[X]/(X^n - 1): c_1 + c_2 X + ... + c_n X^{n-1}.
    Polynomial polynomial() const { return Polynomial(field_, first_row_); }

    /// "circulant:" followed by the first row.
    std::string to_string() const;

    friend bool operator==(const Circulant&, const Circulant&) = default;

   private:
    Field field_;
    std::vector<Element> first_row_;
};

/// Returns the circulant if every row is the cyclic right shift of the row above.
std::optional<Circulant> as_circulant(const Matrix& m);

/// Product computed in the polynomial ring, Phi(A) * Phi(B) mod X^n - 1.
Circulant operator*(const Circulant& a, const Circulant& b);

/// gcd(Phi(A), X^n - 1); the circulant is invertible iff this is 1.
Polynomial circulant_gcd(const Circulant& a);
bool is_invertible(const Circulant& a);

struct SylvesterResult {
    Matrix matrix;
    bool coprime = false;
};

/**
 * Sylvester matrix of p (degree m) and g (degree k): k shifted copies of p's coefficient
 * row stacked on m shifted copies of g's, each of width m + k. For two rules of the same
 * diameter d these are the transition matrices at length 2(d-1). Coprimality is read off
 * the elimination rank (the resultant vanishes iff the matrix is singular).
 */
SylvesterResult sylvester_resultant(const Polynomial& p, const Polynomial& g);

}  // namespace soca

#endif
