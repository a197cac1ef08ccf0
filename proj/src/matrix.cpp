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

#include "soca/matrix.hpp"

#include <cstdint>
#include <utility>

#include "soca/errors.hpp"

namespace soca {

namespace {

std::size_t rank_gf2(const Matrix& m) {
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c)) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || !(rows[r][w] & bit)) continue;
            for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_generic(const Matrix& m) {
    const Field& f = m.field();
    std::vector<std::vector<Element>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows[r].assign(m.row(r).begin(), m.row(r).end());

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Element inv = f.inv(rows[rank][c]);
        for (std::size_t k = c; k < m.cols(); ++k) rows[rank][k] = f.mul(rows[rank][k], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Element factor = rows[r][c];
            for (std::size_t k = c; k < m.cols(); ++k) rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw PreconditionError("matrix entry count does not match its shape");
    for (Element e : entries_)
        if (!field_.contains(e)) throw PreconditionError("matrix entry outside " + field_.descriptor());
}

Matrix::Matrix(const Field& field, const std::vector<std::vector<Element>>& rows)
    : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
    for (const auto& r : rows) {
        if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
        for (Element e : r) {
            if (!field_.contains(e)) throw PreconditionError("matrix entry outside " + field_.descriptor());
            entries_.push_back(e);
        }
    }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, Element v) {
    if (r >= rows_ || c >= cols_) throw PreconditionError("matrix index out of range");
    if (!field_.contains(v)) throw PreconditionError("matrix entry outside " + field_.descriptor());
    entries_[r * cols_ + c] = v;
}

std::string Matrix::to_csv() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out += ',';
            out += std::to_string((*this)(r, c));
        }
        out += '\n';
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw PreconditionError("matrices over different fields");
    if (a.cols() != b.rows()) throw PreconditionError("matrix shapes do not conform");
    const Field& f = a.field();
    std::vector<Element> out(a.rows() * b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Element aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out[i * b.cols() + j] = f.add(out[i * b.cols() + j], f.mul(aik, b(k, j)));
        }
    return Matrix(f, a.rows(), b.cols(), std::move(out));
}

std::vector<Element> apply(const Matrix& m, std::span<const Element> x) {
    if (x.size() != m.cols()) throw PreconditionError("vector length does not match matrix columns");
    const Field& f = m.field();
    std::vector<Element> out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] = f.add(out[r], f.mul(m(r, c), x[c]));
    return out;
}

std::size_t rank(const Matrix& m) { return m.field().is_binary() ? rank_gf2(m) : rank_generic(m); }

bool is_invertible(const Matrix& m) {
    if (!m.is_square()) throw PreconditionError("invertibility requires a square matrix");
    return rank(m) == m.rows();
}

std::optional<std::vector<Element>> null_vector(const Matrix& m) {
    const Field& f = m.field();
    std::vector<std::vector<Element>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows[r].assign(m.row(r).begin(), m.row(r).end());

    // Reduced row echelon form; pivot_col[i] is the pivot column of row i.
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(m.cols(), false);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Element inv = f.inv(rows[rank][c]);
        for (std::size_t k = 0; k < m.cols(); ++k) rows[rank][k] = f.mul(rows[rank][k], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Element factor = rows[r][c];
            for (std::size_t k = 0; k < m.cols(); ++k) rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
        }
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++rank;
    }
    std::size_t free = 0;
    while (free < m.cols() && is_pivot[free]) ++free;
    if (free == m.cols()) return std::nullopt;

    std::vector<Element> x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = f.neg(rows[i][free]);
    return x;
}

Circulant::Circulant(const Field& field, std::vector<Element> first_row)
    : field_(field), first_row_(std::move(first_row)) {
    if (first_row_.empty()) throw PreconditionError("circulant of size zero");
    for (Element e : first_row_)
        if (!field_.contains(e)) throw PreconditionError("circulant entry outside " + field_.descriptor());
}

Circulant Circulant::from_polynomial(const Polynomial& c, std::size_t n) {
    const Polynomial reduced = c % Polynomial::x_pow_minus_one(c.field(), n);
    std::vector<Element> row(n, 0);
    for (std::size_t i = 0; i < reduced.coeffs().size(); ++i) row[i] = reduced.coeffs()[i];
    return Circulant(c.field(), std::move(row));
}

Matrix Circulant::expand() const {
    const std::size_t n = size();
    Matrix m(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, first_row_[(j + n - i) % n]);
    return m;
}

std::string Circulant::to_string() const {
    std::string out = "circulant:";
    for (std::size_t i = 0; i < first_row_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(first_row_[i]);
    }
    return out;
}

std::optional<Circulant> as_circulant(const Matrix& m) {
    if (!m.is_square() || m.rows() == 0) return std::nullopt;
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m(i + 1, (j + 1) % n) != m(i, j)) return std::nullopt;
    return Circulant(m.field(), std::vector<Element>(m.row(0).begin(), m.row(0).end()));
}

Circulant operator*(const Circulant& a, const Circulant& b) {
    if (!(a.field() == b.field()) || a.size() != b.size())
        throw PreconditionError("circulant product needs equal sizes over the same field");
    return Circulant::from_polynomial(a.polynomial() * b.polynomial(), a.size());
}

Polynomial circulant_gcd(const Circulant& a) {
    const Polynomial c = a.polynomial();
    const Polynomial modulus = Polynomial::x_pow_minus_one(a.field(), a.size());
    return gcd(c, modulus);
}

bool is_invertible(const Circulant& a) { return circulant_gcd(a).is_one(); }

SylvesterResult sylvester_resultant(const Polynomial& p, const Polynomial& g) {
    if (!(p.field() == g.field())) throw PreconditionError("polynomials over different fields");
    if (p.degree() < 1 || g.degree() < 1) throw PreconditionError("Sylvester matrix needs degrees of at least 1");
    const auto m = static_cast<std::size_t>(p.degree());
    const auto k = static_cast<std::size_t>(g.degree());
    Matrix s(p.field(), m + k, m + k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i <= m; ++i) s.set(r, r + i, p.coeffs()[i]);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= k; ++i) s.set(k + r, r + i, g.coeffs()[i]);
    const bool coprime = is_invertible(s);
    return {std::move(s), coprime};
}

}  // namespace soca
