#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "milnor/rational.hpp"

namespace milnor {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t size);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Rational> row_vector(std::size_t r) const;

    void append_row(std::span<const Rational> values);
    void swap_rows(std::size_t a, std::size_t b);
    /// Keeps the first `count` rows.
    void truncate_rows(std::size_t count);

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    std::vector<Rational> apply(std::span<const Rational> v) const;

    bool is_zero() const;
    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row-echelon form (same shape; zero rows last).
RationalMatrix rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Row reduction that also records how the result was obtained.
struct TrackedEchelon {
    RationalMatrix reduced;      ///< rank × cols, reduced echelon, no zero rows
    std::vector<std::size_t> pivots;
    RationalMatrix transform;    ///< rank × rows, transform * m == reduced
    RationalMatrix left_kernel;  ///< (rows - rank) × rows, left_kernel * m == 0
};

TrackedEchelon rref_with_transform(const RationalMatrix& m);

/// Basis (as rows) of {v : m v = 0}: one vector per non-pivot column, with
/// a 1 in that column.
RationalMatrix nullspace(const RationalMatrix& m);

}  // namespace milnor
