#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tbcalc {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Builds from a list of rows; every row must have the same length.
    static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows, std::size_t cols);
    /// Single-column matrix.
    static IntegerMatrix column(const IntegerVector& v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntegerVector row(std::size_t r) const;
    IntegerVector col(std::size_t c) const;

    IntegerMatrix transposed() const;
    IntegerMatrix operator-() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);

    bool is_zero() const;

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerVector operator*(const IntegerMatrix& m, const IntegerVector& v);

Integer dot(const IntegerVector& a, const IntegerVector& b);
IntegerVector scaled(const IntegerVector& v, const Integer& factor);
IntegerVector add(const IntegerVector& a, const IntegerVector& b);
bool is_zero(const IntegerVector& v);

std::string to_string(const IntegerVector& v);
std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

}  // namespace tbcalc
