#include "moorediag/matrix.hpp"

#include <stdexcept>

namespace moorediag {

Mat::Mat(std::initializer_list<std::initializer_list<long long>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    a_.resize(r_ * c_);
    size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c_) throw std::invalid_argument("Mat: ragged initializer");
        size_t j = 0;
        for (long long v : row) at(i, j++) = Int(v);
        ++i;
    }
}

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Int(1);
    return m;
}

Mat Mat::diagonal(const std::vector<Int>& d) {
    Mat m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (r_ != c_) return false;
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j)
            if (at(i, j) != Int(i == j ? 1 : 0)) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat m(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
        for (size_t k = 0; k < a.c_; ++k) {
            const Int& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.c_; ++j) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("Mat: dimension mismatch in sum");
    Mat m(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("Mat: dimension mismatch in diff");
    Mat m(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
}

Mat Mat::operator-() const {
    Mat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

Mat Mat::scaled(const Int& k) const {
    Mat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * k;
    return m;
}

std::vector<Int> Mat::col(size_t j) const {
    std::vector<Int> v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Int> Mat::row(size_t i) const {
    std::vector<Int> v(c_);
    for (size_t j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
}

void Mat::set_col(size_t j, const std::vector<Int>& v) {
    if (v.size() != r_) throw std::invalid_argument("Mat::set_col: wrong length");
    for (size_t i = 0; i < r_; ++i) at(i, j) = v[i];
}

Mat Mat::augmented(const Mat& m) const {
    if (m.r_ != r_) throw std::invalid_argument("Mat::augmented: row mismatch");
    Mat out(r_, c_ + m.c_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) out.at(i, j) = at(i, j);
        for (size_t j = 0; j < m.c_; ++j) out.at(i, c_ + j) = m.at(i, j);
    }
    return out;
}

Mat Mat::stacked(const Mat& m) const {
    if (m.c_ != c_) throw std::invalid_argument("Mat::stacked: column mismatch");
    Mat out(r_ + m.r_, c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out.at(i, j) = at(i, j);
    for (size_t i = 0; i < m.r_; ++i)
        for (size_t j = 0; j < c_; ++j) out.at(r_ + i, j) = m.at(i, j);
    return out;
}

Mat Mat::submatrix_cols(const std::vector<size_t>& cols) const {
    Mat out(r_, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < r_; ++i) out.at(i, j) = at(i, cols[j]);
    return out;
}

Mat Mat::submatrix_rows(const std::vector<size_t>& rows) const {
    Mat out(rows.size(), c_);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < c_; ++j) out.at(i, j) = at(rows[i], j);
    return out;
}

void Mat::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
}

void Mat::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < r_; ++k) std::swap(at(k, i), at(k, j));
}

void Mat::negate_row(size_t i) {
    for (size_t k = 0; k < c_; ++k) at(i, k) = -at(i, k);
}

void Mat::negate_col(size_t j) {
    for (size_t k = 0; k < r_; ++k) at(k, j) = -at(k, j);
}

void Mat::add_row_multiple(size_t dst, size_t src, const Int& q) {
    if (q.is_zero()) return;
    for (size_t k = 0; k < c_; ++k) at(dst, k) += q * at(src, k);
}

void Mat::add_col_multiple(size_t dst, size_t src, const Int& q) {
    if (q.is_zero()) return;
    for (size_t k = 0; k < r_; ++k) at(k, dst) += q * at(k, src);
}

std::string Mat::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < r_; ++i) {
        s += i ? ",[" : "[";
        for (size_t j = 0; j < c_; ++j) {
            if (j) s += ",";
            s += at(i, j).to_string();
        }
        s += "]";
    }
    s += "]";
    return s;
}

std::vector<Int> mat_vec(const Mat& m, const std::vector<Int>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: length mismatch");
    std::vector<Int> out(m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) out[i] += m.at(i, j) * v[j];
    return out;
}

}  // namespace moorediag
