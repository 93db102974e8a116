#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "moorediag/bigint.hpp"

namespace moorediag {

/// Dense integer matrix. Everything here is desk-scale, so no attempt is made
/// at sparsity; exactness and predictable behaviour on empty shapes matter more.
class Mat {
  public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<long long>> rows);

    static Mat identity(size_t n);
    /// n x n with the given diagonal entries.
    static Mat diagonal(const std::vector<Int>& d);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Int& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Int& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    Mat transpose() const;
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    Mat operator-() const;
    Mat scaled(const Int& k) const;
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::vector<Int> col(size_t j) const;
    std::vector<Int> row(size_t i) const;
    void set_col(size_t j, const std::vector<Int>& v);
    /// Columns of `m` appended on the right.
    Mat augmented(const Mat& m) const;
    /// Rows of `m` appended below.
    Mat stacked(const Mat& m) const;
    Mat submatrix_cols(const std::vector<size_t>& cols) const;
    Mat submatrix_rows(const std::vector<size_t>& rows) const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    void negate_row(size_t i);
    void negate_col(size_t j);
    /// row[dst] += q * row[src]
    void add_row_multiple(size_t dst, size_t src, const Int& q);
    /// col[dst] += q * col[src]
    void add_col_multiple(size_t dst, size_t src, const Int& q);

    std::string to_string() const;

  private:
    size_t r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

std::vector<Int> mat_vec(const Mat& m, const std::vector<Int>& v);

}  // namespace moorediag
