#pragma once

#include <mindeg/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace mindeg {

// Dense matrix of exact rationals, row major. Empty dimensions are legal and
// behave as rank 0.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    // Concatenates columns of matrices with a common row count.
    static RationalMatrix hstack(std::span<const RationalMatrix> parts) {
        std::size_t rows = 0, cols = 0;
        for (const auto& p : parts) {
            if (p.cols() == 0) continue;
            if (rows != 0 && p.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
            rows = p.rows();
            cols += p.cols();
        }
        RationalMatrix out(rows, cols);
        std::size_t base = 0;
        for (const auto& p : parts) {
            if (p.cols() == 0) continue;
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < p.cols(); ++j) out.at(i, base + j) = p.at(i, j);
            base += p.cols();
        }
        return out;
    }

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

namespace detail {

// Clears the denominators of one row; the rank is invariant under scaling
// rows by nonzero rationals.
inline std::vector<Integer> integer_rows(const RationalMatrix& m) {
    std::vector<Integer> out(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer scale = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            scale = lcm(scale, denominator(m.at(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m.at(i, j);
            out[i * m.cols() + j] = numerator(x) * (scale / denominator(x));
        }
    }
    return out;
}

}  // namespace detail

/*
 * Rank by fraction-free (Bareiss) elimination over the integers.
 *
 * Every intermediate entry is a minor of the row-scaled input, so the
 * division by the previous pivot is exact and entry growth stays at
 * determinant size. Pivoting is deterministic: columns are scanned left to
 * right and the first remaining row with a nonzero entry is chosen.
 */
inline long rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<Integer> a = detail::integer_rows(m);
    auto e = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * cols + j]; };

    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && e(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(e(pivot, j), e(r, j));
        const Integer p = e(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                e(i, j) = (e(i, j) * p - e(i, c) * e(r, j)) / prev;
            e(i, c) = 0;
        }
        prev = p;
        ++r;
    }
    return static_cast<long>(r);
}

// Codimension of the column span inside the codomain.
inline long image_codim(const RationalMatrix& m) {
    return static_cast<long>(m.rows()) - rank(m);
}

namespace detail {

// Reduced row echelon form over the rationals, first-nonzero pivoting.
// Returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

// A basis of the functionals on the codomain vanishing on the image, i.e. of
// the left null space. Deterministic given the entry order: the canonical
// kernel basis of the transpose in RREF, free coordinates ascending.
inline std::vector<std::vector<Rational>> cokernel_basis(const RationalMatrix& m) {
    RationalMatrix t = m.transposed();
    const std::vector<std::size_t> pivots = detail::rref(t);
    std::vector<bool> is_pivot(m.rows(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.rows(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.rows());
        v[free] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -t.at(pr, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace mindeg
