#pragma once

// Exact linear algebra over Z and Q.

#include "dpinv/integer.hpp"

#include <optional>
#include <span>
#include <vector>

namespace dpinv {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    /// Throws std::invalid_argument if the rows are ragged.
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static ExactMatrix from_integer_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool is_integral() const;
    /// Each row scaled by the lcm of its denominators.
    std::vector<std::vector<Integer>> integer_rows() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const ExactMatrix& m);

/// Determinant of a square matrix by Bareiss elimination.
Rational determinant(const ExactMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.
/// Throws std::invalid_argument if an entry is not an integer.
std::vector<Integer> smith_normal_form(const ExactMatrix& m);

/// Coefficients c with sum c_i vectors[i] = target, if they exist.
/// Throws std::invalid_argument on a length mismatch.
std::optional<std::vector<Rational>> in_span(const std::vector<std::vector<Rational>>& vectors,
                                             const std::vector<Rational>& target);

/// Row space over Q built incrementally; rows are kept primitive and in
/// echelon form with integer entries.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dimension) : dim_(dimension) {}

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == dim_; }

    /// Returns true if the row enlarged the span.
    bool add(std::vector<Integer> row);
    bool contains(std::vector<Integer> row) const;

private:
    /// Reduces in place; returns the pivot column of the remainder or dim_ if zero.
    std::size_t reduce(std::vector<Integer>& row) const;

    std::size_t dim_;
    std::vector<std::vector<Integer>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace dpinv
