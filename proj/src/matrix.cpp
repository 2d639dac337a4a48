#include "milnor/matrix.hpp"

#include <algorithm>

#include "milnor/error.hpp"

namespace milnor {

RationalMatrix RationalMatrix::identity(std::size_t size) {
    RationalMatrix out(size, size);
    for (std::size_t i = 0; i < size; ++i) out(i, i) = 1;
    return out;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    RationalMatrix out(0, cols);
    for (const auto& r : rows) out.append_row(r);
    return out;
}

std::vector<Rational> RationalMatrix::row_vector(std::size_t r) const {
    auto view = row(r);
    return {view.begin(), view.end()};
}

void RationalMatrix::append_row(std::span<const Rational> values) {
    if (values.size() != cols_) throw InputError("row length does not match column count");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void RationalMatrix::truncate_rows(std::size_t count) {
    if (count >= rows_) return;
    rows_ = count;
    data_.resize(rows_ * cols_);
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw InputError("matrix product dimension mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (milnor::is_zero(a)) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
        }
    }
    return out;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw InputError("vector length does not match column count");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!milnor::is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
        }
    }
    return out;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return milnor::is_zero(q); });
}

namespace {

// Gauss-Jordan elimination in place, choosing pivots only among the first
// `pivot_limit` columns. Row operations act on the whole row. Returns the
// pivot columns; rows [0, rank) are then in reduced form on those columns.
std::vector<std::size_t> eliminate(RationalMatrix& m, std::size_t pivot_limit) {
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    Rational factor;
    Rational scratch;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < pivot_limit && rank < m.rows(); ++c) {
        std::size_t pivot_row = rank;
        while (pivot_row < m.rows() && is_zero(m(pivot_row, c))) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        m.swap_rows(rank, pivot_row);

        auto prow = m.row(rank);
        if (prow[c] != 1) {
            const Rational inv = 1 / prow[c];
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!is_zero(prow[j])) prow[j] *= inv;
            }
        }
        support.clear();
        for (std::size_t j = c; j < m.cols(); ++j) {
            if (!is_zero(prow[j])) support.push_back(j);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            auto row = m.row(r);
            if (is_zero(row[c])) continue;
            factor = row[c];
            for (std::size_t j : support) {
                mpq_mul(scratch.get_mpq_t(), factor.get_mpq_t(), prow[j].get_mpq_t());
                mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), scratch.get_mpq_t());
            }
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

}  // namespace

RationalMatrix rref(const RationalMatrix& m) {
    RationalMatrix out = m;
    eliminate(out, out.cols());
    return out;
}

std::size_t rank(const RationalMatrix& m) {
    RationalMatrix work = m;
    return eliminate(work, work.cols()).size();
}

RationalMatrix nullspace(const RationalMatrix& m) {
    RationalMatrix reduced = m;
    const auto pivots = eliminate(reduced, reduced.cols());
    RationalMatrix out(0, m.cols());
    std::vector<Rational> v(m.cols());
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (p < pivots.size() && pivots[p] == c) {
            ++p;
            continue;
        }
        std::fill(v.begin(), v.end(), Rational(0));
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, c);
        out.append_row(v);
    }
    return out;
}

TrackedEchelon rref_with_transform(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    RationalMatrix augmented(rows, cols + rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) augmented(r, c) = m(r, c);
        augmented(r, cols + r) = 1;
    }
    TrackedEchelon out;
    out.pivots = eliminate(augmented, cols);
    const std::size_t rank = out.pivots.size();
    out.reduced = RationalMatrix(rank, cols);
    out.transform = RationalMatrix(rank, rows);
    out.left_kernel = RationalMatrix(rows - rank, rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols + rows; ++c) {
            const Rational& v = augmented(r, c);
            if (r < rank) {
                if (c < cols) out.reduced(r, c) = v;
                else out.transform(r, c - cols) = v;
            } else if (c >= cols) {
                out.left_kernel(r - rank, c - cols) = v;
            }
        }
    }
    return out;
}

}  // namespace milnor
